#pragma once

#include "gcover/gain_graph.hpp"
#include "gcover/matrix.hpp"

#include <vector>

namespace gcover {

/// Z_2 gains on Q_n read off the recursive signed matrix
/// A_1 = [[0,1],[1,0]], A_n = [[A_{n-1}, I], [I, -A_{n-1}]]
/// (residue 1 where the entry is -1). Vertex order is the hypercube's
/// bitstring order.
GainGraph huang_signing(int n);

/// The recursive signed matrix itself, built block by block.
IntMatrix huang_matrix(int n);

/// lift(huang_signing(n)): the 4-cycle-free double cover of Q_n.
CoverGraph cohen_tits_cover(int n);

/// q x q matrix of residues mod r whose entries, read as r-th roots of
/// unity, have pairwise orthogonal rows.
struct ButsonMatrix {
    int q = 0;
    int r = 0;
    Matrix<int> entries;
};

/// entry(j, k) = j k mod q, with r = q.
ButsonMatrix fourier_butson(int q);

/// Throws ParameterError when h is not a Butson Hadamard matrix.
void validate_butson(const ButsonMatrix& h);

/// Gains over Z_r on K_{q,q} (left part 0..q-1, right part q..2q-1):
/// f(j, q + k) = h(j, k).
GainGraph butson_gain(const ButsonMatrix& h);

/// Gains in the degree-3 permutation action of S_3 on K_5: vertex 0 joined by
/// identities, the other edges carrying the transpositions (0 1), (1 2), (0 2).
GainGraph s3_cover_k5();

/// Z_2 gains on K_{3n}: residue 1 exactly on the K_{n,n} between
/// {0..n-1} and {n..2n-1}.
GainGraph k3n_nonexample(int n);

} // namespace gcover
