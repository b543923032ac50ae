#pragma once

#include <cstdint>
#include <vector>

#include "kac/algebra.hpp"

namespace kac {

struct WedderburnData {
    std::vector<int> blocks;
    std::vector<Vec> central;
    // units[k][i * d_k + j] is e_ij^k.
    std::vector<std::vector<Vec>> units;
    // Columns are the matrix units in (k, i, j) order; coord is its inverse.
    Mat unit_basis;
    Mat coord;

    int dim() const { return static_cast<int>(unit_basis.cols()); }
    const Vec& e(int k, int i, int j) const { return units[k][i * blocks[k] + j]; }
    std::vector<Mat> coordinates(const Vec& x) const;
    Vec from_coordinates(const std::vector<Mat>& blocks_in) const;
    int offset(int k) const;
};

WedderburnData wedderburn(const StructAlg& alg, std::uint64_t seed = 0);
ResidualReport check_wedderburn(const StructAlg& alg, const WedderburnData& wd, const Tolerance& tol = {});

struct CanonicalTrace {
    std::vector<double> weights;
    Eigen::RowVectorXcd functional;
    cd operator()(const Vec& x) const { return functional * x; }
};

CanonicalTrace canonical_trace(const StructAlg& alg, const WedderburnData& wd);

bool mvn_equivalent(const StructAlg& alg, const Vec& p, const Vec& q, const WedderburnData& wd,
                    const Tolerance& tol = {});

}  // namespace kac
