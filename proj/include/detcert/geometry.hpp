#pragma once

#include <vector>

#include "detcert/node_simplex.hpp"

namespace detcert {

// Exact geometric characteristics of a nondegenerate simplex relative to the
// unit cube. Axis indices are 0-based in this API; reports print them
// 1-based.
struct GeometryReport {
    std::vector<Rational> axial_diameters;              // d_i, i = 0..n-1
    Rational alpha;                                     // smallest sigma with Q_n in a translate of sigma*S
    Rational xi;                                        // smallest sigma >= 1 with Q_n in sigma*S (centroid homothety)
    std::vector<std::vector<Rational>> segment_centers; // c^(i), centers of the maximal axial segments
    RatMatrix weights;                                  // m_ij, barycentric weights of the centers, n x (n+1)
};

// d_i = 2 / sum_j |l_ij|: length of the longest segment in S parallel to
// coordinate axis i.
std::vector<Rational> axial_diameters(const LagrangeData& lagrange);

// Center of the maximal segment parallel to the given axis,
// c = sum_j m_j x^(j) with m_j = |l_ij| / sum_k |l_ik|.
std::vector<Rational> segment_center(const LagrangeData& lagrange, const NodeMatrix& node,
                                     std::size_t axis);

// alpha(S) = (1/2) sum_i sum_j |l_ij|; coincides with sum_i 1/d_i.
Rational alpha_of(const LagrangeData& lagrange);

// xi(S): 1 when every cube vertex lies in S, otherwise
// (n+1) * max_j max_{x in ver(Q_n)} (-lambda_j(x)) + 1, with the inner
// maximum evaluated in closed form per coordinate (no 2^n enumeration).
Rational xi_of(const LagrangeData& lagrange);

GeometryReport geometry_report(const LagrangeData& lagrange, const NodeMatrix& node);

}  // namespace detcert
