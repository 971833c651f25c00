#pragma once

#include "isoflat/numbers.hpp"

#include <optional>
#include <vector>

namespace isoflat {

using IntVec = std::vector<Int>;

// Dense row-major integer matrix, small dimensions only.
struct IntMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static IntMat identity(std::size_t n);
    static IntMat from_rows(const std::vector<IntVec>& rows_in, std::size_t cols);
    std::vector<IntVec> to_rows() const;

    IntVec row(std::size_t i) const;
    friend bool operator==(const IntMat& x, const IntMat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

IntVec add(const IntVec& x, const IntVec& y);
IntVec sub(const IntVec& x, const IntVec& y);
IntVec neg(const IntVec& x);
IntVec scaled(const IntVec& x, const Int& k);
bool is_zero(const IntVec& x);

// y = x * M (row vector times matrix).
IntVec mul_row(const IntVec& x, const IntMat& m);
IntMat mul(const IntMat& x, const IntMat& y);
IntMat transpose(const IntMat& m);

// Row-style Hermite normal form: pivots positive, zero rows dropped,
// entries above each pivot reduced into [0, pivot). Unique per row lattice.
IntMat hnf(const IntMat& m);

// HNF together with a unimodular U such that U * m = [H; 0]; the rows of U
// below rank(m) form a basis of the left kernel of m.
struct HnfResult {
    IntMat h;        // HNF, zero rows dropped
    IntMat u;        // full square transform
    std::size_t rank = 0;
};
HnfResult hnf_with_transform(const IntMat& m);

// Basis of { x : x * m = 0 } as rows.
IntMat left_kernel(const IntMat& m);

// Is t in the lattice generated by the rows of m?
bool in_row_lattice(const IntMat& m, const IntVec& t);

// Solve x * m = t over the integers; nullopt when t is outside the lattice.
std::optional<IntVec> solve_row(const IntMat& m, const IntVec& t);

// Lattice intersection of the two row lattices, as an HNF basis.
IntMat lattice_intersection(const IntMat& g1, const IntMat& g2);

// Rank over Q of a set of rational vectors.
using RatVec = std::vector<Rational>;
std::size_t rational_rank(std::vector<RatVec> vecs);

// Is v in the Q-span of the given vectors?
bool in_rational_span(const std::vector<RatVec>& span, const RatVec& v);

// Basis (echelon form) of the Q-span.
std::vector<RatVec> rational_row_basis(std::vector<RatVec> vecs);

// Intersection of two Q-subspaces given by spanning sets.
std::vector<RatVec> rational_intersection(const std::vector<RatVec>& a,
                                          const std::vector<RatVec>& b);

}  // namespace isoflat
