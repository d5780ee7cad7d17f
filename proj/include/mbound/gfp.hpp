#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mbound {

using BigInt = boost::multiprecision::cpp_int;

// Vector over GF(p), entries kept as canonical residues in {0,...,p-1}.
using Fvec = std::vector<int>;

// Prime modulus p and dimension n. Primality is checked at construction.
struct Params {
    int p;
    int n;
    Params(int p_, int n_);
};

bool is_prime(int p);

// a^{-1} mod p via extended Euclid. Requires gcd(a, p) = 1.
int mod_inverse(int a, int p);

// p^e as an unbounded integer (p^n overflows 64 bits for legitimate inputs).
BigInt pow_big(int base, int exp);

struct FieldMatrix {
    std::vector<Fvec> rows;
    std::optional<std::vector<int>> aug;  // augmented column, one entry per row

    FieldMatrix() = default;
    FieldMatrix(std::vector<Fvec> rows_, std::optional<std::vector<int>> aug_ = std::nullopt);

    std::size_t row_count() const { return rows.size(); }
    std::size_t col_count() const { return rows.empty() ? 0 : rows.front().size(); }
};

struct RrefResult {
    FieldMatrix reduced;
    int rank;         // pivot count among coefficient columns
    bool consistent;  // no pivot in the augmented column
};

int dot_mod(const Fvec& x, const Fvec& u, const Params& params);

RrefResult rref_mod(FieldMatrix m, const Params& params);

// Number of u in {0,...,p-1}^n solving the augmented system:
// 0 if inconsistent, else p^(n - rank).
BigInt solution_count(const FieldMatrix& m, const Params& params);

// True iff t = lambda * s (mod p) for some lambda in {1,...,p-1}.
// Symmetric for nonzero s, t; zero input is a usage error.
bool is_multiple_pair(const Fvec& s, const Fvec& t, const Params& params);

bool is_zero_vec(const Fvec& v);

// Lexicographic enumeration of {lo,...,p-1}^n, leftmost coordinate most
// significant. index_to_vec(i) is the i-th vector in that order.
Fvec index_to_vec(long long index, int base, int n, int lo = 0);
long long vec_to_index(const Fvec& v, int base, int lo = 0);

}  // namespace mbound
