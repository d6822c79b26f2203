#include "maxord/groupcheck.hpp"

#include <cassert>
#include <stdexcept>

#include "maxord/formula.hpp"

namespace maxord {

namespace {

// Carry-less product reduced modulo the field polynomial.
uint8_t poly_mul(uint8_t a, uint8_t b, unsigned f, uint8_t modulus) {
  unsigned acc = 0;
  for (unsigned i = 0; i < f; ++i)
    if (b & (1u << i)) acc ^= static_cast<unsigned>(a) << i;
  for (int bit = 2 * static_cast<int>(f) - 2; bit >= static_cast<int>(f); --bit)
    if (acc & (1u << bit)) acc ^= static_cast<unsigned>(modulus) << (bit - f);
  return static_cast<uint8_t>(acc);
}

uint8_t modulus_for(unsigned f) {
  switch (f) {
    case 1: return 0b11;     // x + 1; no reduction happens at f = 1
    case 2: return 0b111;    // x^2 + x + 1
    case 3: return 0b1011;   // x^3 + x + 1
  }
  throw std::invalid_argument("gf table: only field sizes 2, 4, 8 are supported");
}

}  // namespace

GFTable::GFTable(FieldSize q) : q_(q.q), f_(q.f) {
  const uint8_t mod = modulus_for(f_);
  for (unsigned a = 0; a < q_; ++a)
    for (unsigned b = 0; b < q_; ++b)
      mul_[a][b] = poly_mul(static_cast<uint8_t>(a), static_cast<uint8_t>(b), f_, mod);
  inv_[0] = 0;
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul_[a][b] == 1) inv_[a] = static_cast<uint8_t>(b);
}

const GFTable& GFTable::of(FieldSize q) {
  modulus_for(q.f);
  static const GFTable gf2(FieldSize::of(2));
  static const GFTable gf4(FieldSize::of(4));
  static const GFTable gf8(FieldSize::of(8));
  switch (q.f) {
    case 1: return gf2;
    case 2: return gf4;
    default: return gf8;
  }
}

uint8_t GFTable::inv(uint8_t a) const {
  if (a == 0) throw std::invalid_argument("gf inv: zero has no inverse");
  return inv_[a];
}

GFMatrix::GFMatrix(unsigned n, const GFTable& gf)
    : n_(n), gf_(&gf), e_(static_cast<size_t>(n) * n, 0) {}

GFMatrix GFMatrix::identity(unsigned n, const GFTable& gf) {
  GFMatrix m(n, gf);
  for (unsigned i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

GFMatrix GFMatrix::operator*(const GFMatrix& rhs) const {
  assert(n_ == rhs.n_ && gf_ == rhs.gf_);
  GFMatrix out(n_, *gf_);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned k = 0; k < n_; ++k) {
      const uint8_t aik = at(i, k);
      if (aik == 0) continue;
      for (unsigned j = 0; j < n_; ++j) {
        const uint8_t b = rhs.at(k, j);
        if (b != 0) out.e_[i * n_ + j] ^= gf_->mul(aik, b);
      }
    }
  return out;
}

GFMatrix GFMatrix::transposed() const {
  GFMatrix out(n_, *gf_);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j) out.set(j, i, at(i, j));
  return out;
}

GFMatrix symplectic_form(unsigned m, const GFTable& gf) {
  GFMatrix j(2 * m, gf);
  for (unsigned i = 0; i < m; ++i) {
    j.set(i, m + i, 1);
    j.set(m + i, i, 1);
  }
  return j;
}

bool is_symplectic(const GFMatrix& a) {
  const unsigned m = a.dim() / 2;
  if (a.dim() != 2 * m || a.dim() == 0) return false;
  const GFMatrix j = symplectic_form(m, a.field());
  return a.transposed() * j * a == j;
}

GFMatrix transvection(const std::vector<uint8_t>& v, uint8_t lambda,
                      const GFTable& gf) {
  const unsigned n = static_cast<unsigned>(v.size());
  if (n == 0 || n % 2 != 0)
    throw std::invalid_argument("transvection: vector length must be 2m");
  if (lambda == 0) throw std::invalid_argument("transvection: lambda must be nonzero");
  bool nonzero = false;
  for (uint8_t c : v) nonzero |= (c != 0);
  if (!nonzero) throw std::invalid_argument("transvection: v must be nonzero");

  const unsigned m = n / 2;
  // (Jv)_i picks the partner coordinate of the hyperbolic pair.
  GFMatrix t = GFMatrix::identity(n, gf);
  for (unsigned i = 0; i < n; ++i) {
    const uint8_t jv = v[i < m ? i + m : i - m];
    if (jv == 0) continue;
    const uint8_t row = gf.mul(lambda, jv);
    for (unsigned j = 0; j < n; ++j)
      if (v[j] != 0) t.set(i, j, t.at(i, j) ^ gf.mul(row, v[j]));
  }
  assert(is_symplectic(t));
  return t;
}

GFMatrix random_symplectic(unsigned m, FieldSize q, unsigned n_factors,
                           SplitMix64& rng) {
  if (m == 0) throw std::invalid_argument("random_symplectic: m must be >= 1");
  if (n_factors == 0)
    throw std::invalid_argument("random_symplectic: n_factors must be >= 1");
  const GFTable& gf = GFTable::of(q);
  const unsigned n = 2 * m;
  GFMatrix acc = GFMatrix::identity(n, gf);
  std::vector<uint8_t> v(n);
  for (unsigned k = 0; k < n_factors; ++k) {
    bool nonzero = false;
    do {
      for (unsigned i = 0; i < n; ++i) {
        v[i] = static_cast<uint8_t>(rng.next_bits(q.f));
        nonzero |= (v[i] != 0);
      }
    } while (!nonzero);
    uint8_t lambda;
    do {
      lambda = static_cast<uint8_t>(rng.next_bits(q.f));
    } while (lambda == 0);
    acc = acc * transvection(v, lambda, gf);
    assert(is_symplectic(acc));
  }
  return acc;
}

GFMatrix random_symplectic(unsigned m, FieldSize q, unsigned n_factors,
                           uint64_t seed) {
  SplitMix64 rng(seed);
  return random_symplectic(m, q, n_factors, rng);
}

std::optional<Natural> element_order(const GFMatrix& a, const Natural& cap) {
  if (cap < 1) throw std::invalid_argument("element_order: cap must be >= 1");
  const GFMatrix id = GFMatrix::identity(a.dim(), a.field());
  GFMatrix power = a;
  Natural k = 1;
  while (power != id) {
    if (k >= cap) return std::nullopt;
    power = power * a;
    k += 1;
  }
  return k;
}

SampleReport sample_max_order(unsigned long m, FieldSize q, uint64_t samples,
                              uint64_t seed) {
  const bool supported = (m == 1 && q.q == 2) || (m == 1 && q.q == 4) ||
                         (m == 2 && q.q == 2) || (m == 3 && q.q == 2);
  if (!supported)
    throw std::invalid_argument(
        "sample_max_order: supported (m, q) are (1,2), (1,4), (2,2), (3,2)");

  SampleReport report;
  report.m = m;
  report.q = q;
  report.samples = samples;
  report.seed = seed;
  report.bound = max_order(m, q);
  report.max_observed = 0;

  const unsigned n = static_cast<unsigned>(2 * m);
  const unsigned base_factors = 2 * n * n;
  for (uint64_t i = 0; i < samples; ++i) {
    SplitMix64 rng(sample_stream_seed(seed, i));
    const unsigned k = base_factors + static_cast<unsigned>(rng.next() % (n + 2));
    const GFMatrix a = random_symplectic(static_cast<unsigned>(m), q, k, rng);
    const auto order = element_order(a, report.bound);
    if (!order) {
      report.violated = true;
      continue;
    }
    const unsigned long o = order->get_ui();
    ++report.histogram[o];
    if (*order > report.max_observed) report.max_observed = *order;
  }
  return report;
}

}  // namespace maxord
