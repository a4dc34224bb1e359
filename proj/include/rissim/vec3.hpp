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

#ifndef RISSIM_VEC3_HPP
#define RISSIM_VEC3_HPP

#include <cmath>
#include <stdexcept>

namespace rissim
{

// Point or direction in the local metric frame (x east, y north, z up), meters.
// Every construction path rejects NaN/Inf, so a Vec3 is always finite.
class Vec3
{
public:
    constexpr Vec3() = default;

    Vec3(double x, double y, double z)
        : x_(x), y_(y), z_(z)
    {
        if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
            throw std::domain_error("Vec3 components must be finite.");
    }

    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }

    Vec3 operator+(const Vec3 &o) const { return {x_ + o.x_, y_ + o.y_, z_ + o.z_}; }
    Vec3 operator-(const Vec3 &o) const { return {x_ - o.x_, y_ - o.y_, z_ - o.z_}; }
    Vec3 operator*(double s) const { return {x_ * s, y_ * s, z_ * s}; }
    Vec3 operator/(double s) const { return {x_ / s, y_ / s, z_ / s}; }
    Vec3 operator-() const { return {-x_, -y_, -z_}; }

    bool operator==(const Vec3 &o) const = default;

    double dot(const Vec3 &o) const { return x_ * o.x_ + y_ * o.y_ + z_ * o.z_; }
    double norm() const { return std::sqrt(dot(*this)); }
    double horizontal_norm() const { return std::hypot(x_, y_); }

    // Throws std::domain_error for the zero vector.
    Vec3 normalized() const
    {
        const double n = norm();
        if (n == 0.0)
            throw std::domain_error("Cannot normalize a zero-length vector.");
        return *this / n;
    }

private:
    double x_ = 0.0;
    double y_ = 0.0;
    double z_ = 0.0;
};

inline Vec3 operator*(double s, const Vec3 &v) { return v * s; }

// Linear interpolation p + t (q - p).
inline Vec3 lerp(const Vec3 &p, const Vec3 &q, double t) { return p + (q - p) * t; }

} // namespace rissim

#endif
