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

#include "rissim/road_graph.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace rissim
{

void RoadGraph::add_node(NodeId id, const Vec3 &position)
{
    nodes_.insert_or_assign(id, position);
    adjacency_.try_emplace(id);
}

void RoadGraph::add_edge(NodeId a, NodeId b)
{
    if (!has_node(a) || !has_node(b))
        throw std::out_of_range("Road edge references unknown node " + std::to_string(has_node(a) ? b : a) + ".");
    if (a == b || adjacent(a, b))
        return;
    const double length = (nodes_.at(b) - nodes_.at(a)).norm();
    adjacency_[a][b] = length;
    adjacency_[b][a] = length;
    edges_.push_back({a, b, length});
}

const std::map<NodeId, double> &RoadGraph::neighbors(NodeId id) const
{
    static const std::map<NodeId, double> none;
    const auto it = adjacency_.find(id);
    return it == adjacency_.end() ? none : it->second;
}

bool RoadGraph::adjacent(NodeId a, NodeId b) const
{
    return neighbors(a).contains(b);
}

std::size_t RoadGraph::component_count() const
{
    std::set<NodeId> seen;
    std::size_t components = 0;
    for (const auto &[start, _] : nodes_)
    {
        if (seen.contains(start))
            continue;
        ++components;
        std::vector<NodeId> stack{start};
        seen.insert(start);
        while (!stack.empty())
        {
            const NodeId n = stack.back();
            stack.pop_back();
            for (const auto &[m, __] : neighbors(n))
                if (seen.insert(m).second)
                    stack.push_back(m);
        }
    }
    return components;
}

} // namespace rissim
