// collective_basis.hpp — Permutation-symmetric N-qutrit subspace and collective ladder operators
//
// States |M;m> carry M large (level 2) and m small (level 1) excitations with
// M + m <= N. The flattened index orders states by total excitation k = M + m
// and then by M:  index(M, m) = k (k + 1) / 2 + M.  Every superoperator in the
// library is laid out on this ordering.

#pragma once

#include <optional>
#include <string_view>

#include "qfridge/types.hpp"

namespace qfridge {

struct BasisIndex {
    int M{0};
    int m{0};

    friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// (N + 1)(N + 2) / 2
int basis_dim(int N);

class CollectiveBasis {
public:
    explicit CollectiveBasis(int n_qutrits);

    int n_qutrits() const { return n_; }
    int dim() const { return dim_; }

    bool contains(BasisIndex s) const { return s.M >= 0 && s.m >= 0 && s.M + s.m <= n_; }
    int index(BasisIndex s) const;
    BasisIndex state(int index) const;

private:
    int n_;
    int dim_;
};

enum class LadderKind {
    Jc_plus,
    Jc_minus,
    Jh_plus,
    Jh_minus,
    Jw_plus,
    Jw_minus,
    Sminus_plus,  // S_-^+ : creates a |-> excitation
    Sminus_minus, // S_-^-
    Splus_plus,   // S_+^+ : creates a |+> excitation
    Splus_minus,  // S_+^-
    number_small, // N_delta, counts m
    number_large, // N_Delta, counts M
    identity,
};

std::string_view to_string(LadderKind kind);
bool is_rotated(LadderKind kind);
LadderKind adjoint_kind(LadderKind kind);

struct LadderElement {
    std::optional<BasisIndex> to; // empty when the move leaves the simplex
    double amplitude{0.0};
};

/// Image and amplitude of a bare-basis operator acting on |M;m>.
/// Rotated (S) kinds mix two targets and are rejected with std::logic_error.
LadderElement ladder_element(LadderKind kind, BasisIndex from, int N);

struct CollectiveOperator {
    SparseMatrix matrix;
    LadderKind kind;
};

/// Sparse matrix over |M;m>. For S kinds alpha is the signed rotation angle:
/// S_-^- = cos(alpha) J_c^- - sin(alpha) J_h^-,  S_+^- = sin(alpha) J_c^- + cos(alpha) J_h^-.
CollectiveOperator build_operator(LadderKind kind, int N, double alpha = 0.0);

/// Unitary whose column (M,m) holds |M,m> ∝ (S_+^+)^M (S_-^+)^m |0...0> in
/// |M;m> coordinates. Columns carry positive normalisation. Throws
/// NumericalFailure if orthonormality is lost beyond 1e-10.
Matrix rotated_basis_transform(int N, double alpha);

/// Collective Floquet Hamiltonian sum_i (H_F)_i over |M;m>.
SparseMatrix collective_floquet_hamiltonian(int N, double delta, double Delta, double Omega,
                                            double lambda);

} // namespace qfridge
