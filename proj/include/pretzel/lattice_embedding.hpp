#ifndef PRETZEL_LATTICE_EMBEDDING_HPP
#define PRETZEL_LATTICE_EMBEDDING_HPP

#include <vector>

#include "pretzel/int_matrix.hpp"
#include "pretzel/numeric.hpp"

namespace pretzel {

// Integer solutions of p*l^2 + r*(l+1)^2 = -q, ascending.  The existence of
// such an l is the Donaldson-side sliceness constraint for P(p,q,r).
std::vector<long long> lambda_solutions(long long p, long long q, long long r);

// The (p+r) x (p+r) matrix whose first p+r-1 rows are e_i - e_{i+1} and whose
// last row is lambda on the first p columns and lambda+1 on the last r;
// satisfies -A A^T = incidence of the reduced graph with q = -(p l^2 + r (l+1)^2)
// and |det A| = |p*lambda + r*(lambda+1)|.
IntMatrix build_A(long long p, long long r, long long lambda);

// Exact test G == -A A^T.
bool verify_factorization(const IntMatrix& g, const IntMatrix& a);

// Rows are the images of the source basis vectors in (Z^N, -Id), so
// row_i . row_j = -G_ij in the Euclidean pairing.
struct LatticeEmbedding {
    IntMatrix phi;

    friend bool operator==(const LatticeEmbedding& a, const LatticeEmbedding& b) {
        return a.phi == b.phi;
    }
};

// Canonical representative of the orbit of phi under signed permutations of
// the N columns: stabilizer-chain normal form (per row: entries sorted
// non-increasing within each block of columns still interchangeable, signs
// normalized on columns untouched so far).  Idempotent.
IntMatrix embedding_canonical_form(const IntMatrix& phi);

// All isometric embeddings of (Z^n, G) into (Z^N, -Id) up to signed column
// permutation, one canonical representative each.  Depth-first search over
// rows ordered by increasing |G_ii|, candidate row vectors bounded entrywise
// by isqrt(-G_ii), pruned by exact inner-product and norm arithmetic; the
// orderly-generation constraints make each orbit appear exactly once.
std::vector<LatticeEmbedding> find_embeddings(const IntMatrix& g, std::size_t target_rank);
std::vector<LatticeEmbedding> find_embeddings(const IntMatrix& g); // target_rank = n

// n x n integer solutions of  -q I = p B B^T + r (B+I)(B+I)^T  with entries
// in [-entry_bound, entry_bound], up to simultaneous row/column permutation.
struct BMatrix {
    IntMatrix b;

    friend bool operator==(const BMatrix& x, const BMatrix& y) { return x.b == y.b; }
};

std::vector<BMatrix> search_B_matrices(long long p, long long q, long long r, std::size_t n,
                                       long long entry_bound);
// entry_bound = 1 + isqrt(-q / min(p,r)); the diagonal of the matrix equation
// bounds every entry by this, so the default is complete.
std::vector<BMatrix> search_B_matrices(long long p, long long q, long long r, std::size_t n);
long long default_b_entry_bound(long long p, long long q, long long r);

} // namespace pretzel

#endif
