#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "maxord/arith.hpp"

namespace maxord {

// SplitMix64. State advances by 0x9e3779b97f4a7c15; the output mix is
// (z ^= z >> 30) *= 0xbf58476d1ce4e5b9, (z ^= z >> 27) *= 0x94d049bb133111eb,
// z ^= z >> 31. Sampling derives the stream for sample i from the run seed
// as seed + (i + 1) * 0x9e3779b97f4a7c15 (mod 2^64).
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Low bits: 2^bits must divide 2^64.
  uint64_t next_bits(unsigned bits) { return next() & ((1ULL << bits) - 1); }

 private:
  uint64_t state_;
};

inline uint64_t sample_stream_seed(uint64_t seed, uint64_t index) {
  return seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
}

// Arithmetic tables for the fields of size 2, 4, 8. Elements are f-bit
// values, the bits being coefficients of a polynomial over the 2-element
// field reduced modulo a fixed irreducible: x^2 + x + 1 for f = 2,
// x^3 + x + 1 for f = 3.
class GFTable {
 public:
  static const GFTable& of(FieldSize q);  // f in {1, 2, 3}

  unsigned long size() const { return q_; }
  unsigned degree() const { return f_; }

  uint8_t add(uint8_t a, uint8_t b) const { return a ^ b; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a][b]; }
  uint8_t inv(uint8_t a) const;

 private:
  explicit GFTable(FieldSize q);

  unsigned long q_;
  unsigned f_;
  uint8_t mul_[8][8] = {};
  uint8_t inv_[8] = {};
};

// Square matrix over one of the GFTable fields. Vectors are rows and
// matrices act on the right, x -> xA.
class GFMatrix {
 public:
  GFMatrix(unsigned n, const GFTable& gf);

  static GFMatrix identity(unsigned n, const GFTable& gf);

  unsigned dim() const { return n_; }
  const GFTable& field() const { return *gf_; }

  uint8_t at(unsigned i, unsigned j) const { return e_[i * n_ + j]; }
  void set(unsigned i, unsigned j, uint8_t v) { e_[i * n_ + j] = v; }

  GFMatrix operator*(const GFMatrix& rhs) const;
  GFMatrix transposed() const;

  friend bool operator==(const GFMatrix&, const GFMatrix&) = default;

 private:
  unsigned n_;
  const GFTable* gf_;
  std::vector<uint8_t> e_;
};

// The fixed alternating form: J has identity blocks on the anti-diagonal,
// zero blocks on the diagonal.
GFMatrix symplectic_form(unsigned m, const GFTable& gf);

// A^T J A == J for the form above.
bool is_symplectic(const GFMatrix& a);

// x -> x + lambda <x, v> v for the fixed form; v != 0, lambda != 0.
// An involution in characteristic 2.
GFMatrix transvection(const std::vector<uint8_t>& v, uint8_t lambda,
                      const GFTable& gf);

// Product of n_factors transvections with random nonzero (v, lambda).
// Always exactly symplectic. n_factors >= 1.
GFMatrix random_symplectic(unsigned m, FieldSize q, unsigned n_factors,
                           SplitMix64& rng);
GFMatrix random_symplectic(unsigned m, FieldSize q, unsigned n_factors,
                           uint64_t seed);

// Smallest k >= 1 with A^k = I, by iterated multiplication; nullopt when the
// order would exceed cap.
std::optional<Natural> element_order(const GFMatrix& a, const Natural& cap);

struct SampleReport {
  unsigned long m = 0;
  FieldSize q;
  uint64_t samples = 0;
  uint64_t seed = 0;
  Natural bound;         // the closed-formula maximum order
  Natural max_observed;
  std::map<unsigned long, uint64_t> histogram;  // order -> count
  bool violated = false;  // some sampled order exceeded the bound
};

// Samples random symplectic elements and tallies their orders against the
// closed formula. Supported only where random sampling covers every order
// class: (m, q) in {(1,2), (1,4), (2,2), (3,2)}.
//
// Sample i uses its own SplitMix64 stream (see sample_stream_seed) and
// draws, in order: the factor count as 2*(2m)^2 + next() % (2m + 2), then
// per factor the vector v (2m field elements of f bits each, redrawn while
// zero) and lambda (f bits, redrawn while zero). Factor counts of both
// parities occur; products of an even number of transvections can miss part
// of the group.
SampleReport sample_max_order(unsigned long m, FieldSize q, uint64_t samples,
                              uint64_t seed);

}  // namespace maxord
