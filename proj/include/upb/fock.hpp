// fock.hpp — Truncated three-mode Fock basis and sparse bosonic mode operators

#pragma once

#include <Eigen/SparseCore>

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace upb {

using Complex = std::complex<double>;
using SpMat = Eigen::SparseMatrix<Complex>;
using Triplet = Eigen::Triplet<Complex>;

// One product state |n1, n2, nm>: photons in cavities one and two, phonons.
struct FockState {
    int n1;
    int n2;
    int nm;
    friend bool operator==(const FockState&, const FockState&) = default;
};

// Basis of all |n1,n2,nm> with n1 + n2 <= n_ph_max and nm <= n_m_max.
//
// Ordering is inherited from the full Kronecker-product space (mode-1 index
// slowest, phonon index fastest) with the over-cutoff rows deleted, so that
// operators restricted to the basis coincide with the row/column deletion
// procedure applied to the full-space Kronecker matrices.
class FockBasis {
public:
    FockBasis() : FockBasis(0, 0) {}

    FockBasis(int n_ph_max, int n_m_max)
        : n_ph_max_(n_ph_max), n_m_max_(n_m_max) {
        if (n_ph_max < 0 || n_m_max < 0)
            throw std::invalid_argument("FockBasis: cutoffs must be nonnegative");
        const int p = n_ph_max + 1;
        const int m = n_m_max + 1;
        full_to_basis_.assign(static_cast<std::size_t>(p) * p * m, -1);
        states_.reserve(static_cast<std::size_t>(p) * (p + 1) / 2 * m);
        for (int n1 = 0; n1 <= n_ph_max; ++n1) {
            for (int n2 = 0; n2 <= n_ph_max; ++n2) {
                if (n1 + n2 > n_ph_max) continue;
                for (int nm = 0; nm <= n_m_max; ++nm) {
                    full_to_basis_[static_cast<std::size_t>(full_index(n1, n2, nm))] =
                        static_cast<int>(states_.size());
                    states_.push_back({n1, n2, nm});
                }
            }
        }
    }

    int n_ph_max() const { return n_ph_max_; }
    int n_m_max() const { return n_m_max_; }

    int size() const { return static_cast<int>(states_.size()); }
    int full_size() const {
        return (n_ph_max_ + 1) * (n_ph_max_ + 1) * (n_m_max_ + 1);
    }

    const std::vector<FockState>& states() const { return states_; }
    const FockState& state(int i) const { return states_.at(static_cast<std::size_t>(i)); }

    // Position of |n1,n2,nm> in the basis, or -1 outside the truncation.
    int index_of(int n1, int n2, int nm) const {
        if (n1 < 0 || n2 < 0 || nm < 0) return -1;
        if (n1 + n2 > n_ph_max_ || nm > n_m_max_) return -1;
        return full_to_basis_[static_cast<std::size_t>(full_index(n1, n2, nm))];
    }
    int index_of(const FockState& s) const { return index_of(s.n1, s.n2, s.nm); }

    // Row index of |n1,n2,nm> in the untruncated product space.
    int full_index(int n1, int n2, int nm) const {
        return (n1 * (n_ph_max_ + 1) + n2) * (n_m_max_ + 1) + nm;
    }

    // Basis position of a full-space row, or -1 if that row was deleted.
    int index_of_full(int full_idx) const {
        return full_to_basis_.at(static_cast<std::size_t>(full_idx));
    }

private:
    int n_ph_max_;
    int n_m_max_;
    std::vector<FockState> states_;
    std::vector<int> full_to_basis_;
};

inline FockBasis build_basis(int n_ph_max, int n_m_max) {
    return FockBasis(n_ph_max, n_m_max);
}

// Destruction operator on Fock levels 0..dim-1: entry (n, n+1) = sqrt(n+1).
inline SpMat single_mode_annihilator(int dim) {
    if (dim < 1)
        throw std::invalid_argument("single_mode_annihilator: dim must be >= 1");
    SpMat a(dim, dim);
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(dim > 0 ? dim - 1 : 0));
    for (int n = 0; n + 1 < dim; ++n)
        t.emplace_back(n, n + 1, Complex(std::sqrt(static_cast<double>(n + 1)), 0.0));
    a.setFromTriplets(t.begin(), t.end());
    return a;
}

inline SpMat sparse_identity(int dim) {
    SpMat id(dim, dim);
    id.setIdentity();
    return id;
}

// Kronecker product; block (i_a, j_a) of the result is a(i_a, j_a) * b.
inline SpMat kron(const SpMat& a, const SpMat& b) {
    SpMat out(a.rows() * b.rows(), a.cols() * b.cols());
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(a.nonZeros()) * static_cast<std::size_t>(b.nonZeros()));
    for (int ka = 0; ka < a.outerSize(); ++ka) {
        for (SpMat::InnerIterator ia(a, ka); ia; ++ia) {
            for (int kb = 0; kb < b.outerSize(); ++kb) {
                for (SpMat::InnerIterator ib(b, kb); ib; ++ib) {
                    t.emplace_back(ia.row() * b.rows() + ib.row(),
                                   ia.col() * b.cols() + ib.col(),
                                   ia.value() * ib.value());
                }
            }
        }
    }
    out.setFromTriplets(t.begin(), t.end());
    return out;
}

// Delete the rows and columns that fall outside the basis truncation.
inline SpMat restrict_to_basis(const SpMat& full, const FockBasis& basis) {
    if (full.rows() != basis.full_size() || full.cols() != basis.full_size())
        throw std::invalid_argument("restrict_to_basis: operator is not on the full product space");
    SpMat out(basis.size(), basis.size());
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(full.nonZeros()));
    for (int k = 0; k < full.outerSize(); ++k) {
        const int col = basis.index_of_full(k);
        if (col < 0) continue;
        for (SpMat::InnerIterator it(full, k); it; ++it) {
            const int row = basis.index_of_full(static_cast<int>(it.row()));
            if (row < 0) continue;
            t.emplace_back(row, col, it.value());
        }
    }
    out.setFromTriplets(t.begin(), t.end());
    return out;
}

struct ModeOperators {
    SpMat a1; // cavity one
    SpMat a2; // cavity two
    SpMat b2; // mechanical mode on cavity two
};

// Destruction operators of the three modes on the truncated basis, built as
// Kronecker products on the full space and then row/column deleted.
inline ModeOperators mode_operators(const FockBasis& basis) {
    const int p = basis.n_ph_max() + 1;
    const int m = basis.n_m_max() + 1;
    const SpMat a = single_mode_annihilator(p);
    const SpMat b = single_mode_annihilator(m);
    const SpMat ip = sparse_identity(p);
    const SpMat im = sparse_identity(m);
    ModeOperators ops;
    ops.a1 = restrict_to_basis(kron(kron(a, ip), im), basis);
    ops.a2 = restrict_to_basis(kron(kron(ip, a), im), basis);
    ops.b2 = restrict_to_basis(kron(kron(ip, ip), b), basis);
    return ops;
}

// Diagonal projector onto the zero-phonon subspace.
inline SpMat zero_phonon_projector(const FockBasis& basis) {
    SpMat p0(basis.size(), basis.size());
    std::vector<Triplet> t;
    for (int i = 0; i < basis.size(); ++i)
        if (basis.state(i).nm == 0) t.emplace_back(i, i, Complex(1.0, 0.0));
    p0.setFromTriplets(t.begin(), t.end());
    return p0;
}

} // namespace upb
