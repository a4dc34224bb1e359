// SPDX-License-Identifier: Apache-2.0
//
// rissim: system-level simulation of RIS-assisted mmWave vehicular links
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISSIM_ROAD_GRAPH_HPP
#define RISSIM_ROAD_GRAPH_HPP

#include "rissim/vec3.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace rissim
{

using NodeId = std::int64_t;

struct RoadEdge
{
    NodeId a = 0;
    NodeId b = 0;
    double length = 0.0;
};

// Undirected road network. Edge lengths are the 3D distance between the end nodes.
class RoadGraph
{
public:
    // Inserts or replaces a node.
    void add_node(NodeId id, const Vec3 &position);

    // Adds an undirected edge between two existing nodes. Self loops and duplicates are ignored.
    // Throws std::out_of_range if an endpoint is unknown.
    void add_edge(NodeId a, NodeId b);

    bool has_node(NodeId id) const { return nodes_.contains(id); }
    const Vec3 &position(NodeId id) const { return nodes_.at(id); }
    const std::map<NodeId, Vec3> &nodes() const { return nodes_; }
    const std::vector<RoadEdge> &edges() const { return edges_; }

    // Neighbors of a node sorted by id, with the connecting edge length.
    const std::map<NodeId, double> &neighbors(NodeId id) const;
    bool adjacent(NodeId a, NodeId b) const;
    std::size_t degree(NodeId id) const { return neighbors(id).size(); }

    // Number of connected components.
    std::size_t component_count() const;

private:
    std::map<NodeId, Vec3> nodes_;
    std::map<NodeId, std::map<NodeId, double>> adjacency_;
    std::vector<RoadEdge> edges_;
};

} // namespace rissim

#endif
