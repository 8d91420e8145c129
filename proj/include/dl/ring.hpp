#pragma once

// Exact arithmetic in the coefficient ring Z/qZ and in the Laurent-type ring
// Z/qZ[t, (t+l_1)^{-1}, ..., (t+l_{d-1})^{-1}], with canonical forms,
// valuations at each place (t+l_i) and at infinity, and digit expansions.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dl {

using Residue = std::uint32_t;

// Validated parameters (d, q, residues l_1..l_{d-1}) shared by every value in
// a computation.  Residue arithmetic lives here so values stay plain data.
struct RingParams {
  int d = 0;
  Residue q = 0;
  std::vector<Residue> residues;  // size d-1, values in {0..q-1}
  // Set when q has a prime factor <= d-1 and d >= 4: the gcd checks pass but
  // the matrix-group/graph identification is not guaranteed by the metric
  // criterion; downstream verification against the BFS oracle is the arbiter.
  bool identification_warning = false;

  Residue reduce(long long v) const {
    long long r = v % static_cast<long long>(q);
    if (r < 0) r += q;
    return static_cast<Residue>(r);
  }
  Residue add(Residue a, Residue b) const { return (a + b) % q; }
  Residue sub(Residue a, Residue b) const { return (a + q - b) % q; }
  Residue neg(Residue a) const { return a == 0 ? 0 : q - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % q);
  }
  // Inverse of a unit mod q; throws std::domain_error for non-units.
  Residue inv(Residue a) const;
  Residue pow(Residue a, long long e) const;  // negative e inverts first

  bool operator==(const RingParams&) const = default;
};

// Checks d >= 2, q >= 2, d <= 7, residues distinct, in range, with pairwise
// differences invertible mod q.  Defaults to residues (0, 1, ..., d-2).
RingParams validate_params(int d, Residue q,
                           std::optional<std::vector<Residue>> residues = {});

// Dense polynomial over Z/qZ, ascending coefficients, trailing coeff nonzero.
struct Poly {
  std::vector<Residue> c;

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for 0
  Residue coeff(int j) const {
    return (j >= 0 && j < static_cast<int>(c.size())) ? c[j] : 0;
  }
  bool operator==(const Poly&) const = default;
};

Poly poly_trim(Poly p);
Poly poly_from(const RingParams& pr, std::initializer_list<long long> coeffs);
Poly poly_add(const RingParams& pr, const Poly& a, const Poly& b);
Poly poly_sub(const RingParams& pr, const Poly& a, const Poly& b);
Poly poly_mul(const RingParams& pr, const Poly& a, const Poly& b);
Poly poly_scale(const RingParams& pr, const Poly& a, Residue c);
Residue poly_eval(const RingParams& pr, const Poly& a, Residue x);

// Division by the monic linear factor (t + l_place):
// p = (t + l_place) * quotient + remainder, remainder = p(-l_place).
struct DivremResult {
  Poly quotient;
  Residue remainder;
};
DivremResult divrem_linear(const RingParams& pr, const Poly& p, int place);

// p * (t + l_place)^n for n >= 0.
Poly poly_mul_place_pow(const RingParams& pr, Poly p, int place, int n);

// Canonical element of the Laurent-type ring: reduced numerator over the
// denominator prod (t+l_i)^{den[i]}.  Canonical means num(-l_i) != 0 whenever
// den[i] > 0; the zero element is (num = 0, den = 0).
struct RationalForm {
  Poly num;
  std::vector<std::uint32_t> den;  // size d-1

  bool is_zero() const { return num.is_zero(); }
  bool operator==(const RationalForm&) const = default;
};

RationalForm rat_zero(const RingParams& pr);
RationalForm rat_const(const RingParams& pr, Residue c);

// Cancels (t+l_i) factors against positive den exponents until canonical.
// The order in which places are tried does not affect the result; the
// explicit-order overload exists so tests can exercise that claim.
RationalForm normalize(const RingParams& pr, Poly num,
                       std::vector<std::uint32_t> den);
RationalForm normalize_ordered(const RingParams& pr, Poly num,
                               std::vector<std::uint32_t> den,
                               std::span<const int> place_order);

RationalForm rat_add(const RingParams& pr, const RationalForm& a,
                     const RationalForm& b);
RationalForm rat_sub(const RingParams& pr, const RationalForm& a,
                     const RationalForm& b);
// a * c * prod (t+l_i)^{k[i]}, k in Z^{d-1}.
RationalForm rat_scale(const RingParams& pr, const RationalForm& a,
                       std::span<const int> k, Residue c);

// Valuation of p in the tree coordinate (0-based tree index in 0..d-1).
// Trees 0..d-2 are the (t+l_i)-adic valuations; tree d-1 is the expansion at
// infinity in t^{-1}, with digit position p corresponding to the coefficient
// of t^{-(p+1)}.  Returns nullopt (= +infinity) for the zero element.
std::optional<int> valuation(const RingParams& pr, const RationalForm& p,
                             int tree);

// Digits of the tree expansion of p at positions lo..hi-1 (hi exclusive).
// The first nonzero digit sits at position valuation(p, tree).
std::vector<Residue> digits(const RingParams& pr, const RationalForm& p,
                            int tree, int lo, int hi);

}  // namespace dl
