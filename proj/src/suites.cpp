#include "wittkit/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

#include "wittkit/endo.hpp"
#include "wittkit/random.hpp"

namespace wittkit {

namespace {

/// nullopt on success, otherwise a description of the failing inputs.
using Outcome = std::optional<std::string>;
using Check = std::function<Outcome(Generator&, std::size_t)>;

struct Property {
  Property(std::string n, Check c, std::optional<std::size_t> k = std::nullopt)
      : name(std::move(n)), check(std::move(c)), cases(k) {}

  std::string name;
  Check check;
  std::optional<std::size_t> cases;  // fixed case count for exhaustive properties
};

struct Named {
  std::string name;
  std::string value;
};

std::string describe(std::initializer_list<Named> inputs) {
  std::string out;
  for (const auto& [name, value] : inputs) {
    if (!out.empty()) out += "; ";
    out += name + " = " + value;
  }
  return out;
}

Outcome verdict(bool ok, std::initializer_list<Named> inputs) {
  if (ok) return std::nullopt;
  return describe(inputs);
}

std::string str(std::size_t n) { return std::to_string(n); }

std::size_t draw_coprime(Generator& g, std::size_t n, std::size_t lo, std::size_t hi) {
  for (;;) {
    const std::size_t m = g.index(lo, hi);
    if (std::gcd(m, n) == 1) return m;
  }
}

UnitSeries lift_series(const UnitSeries& x) {
  std::vector<RingElement> c;
  for (std::size_t k = 1; k <= x.precision(); ++k) c.push_back(lift(x.coeff(k)));
  return UnitSeries(RingSpec::integers(), std::move(c));
}

UnitSeries reduce_series(const UnitSeries& x, const RingSpec& ring) {
  std::vector<RingElement> c;
  for (std::size_t k = 1; k <= x.precision(); ++k) c.push_back(reduce(x.coeff(k), ring));
  return UnitSeries(ring, std::move(c));
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Partitions of n into positive parts, largest first.
void partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& prefix,
                std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t p = std::min(n, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions(n - p, p, prefix, out);
    prefix.pop_back();
  }
}

MatrixEndo jordan_nilpotent(const RingSpec& ring, const std::vector<std::size_t>& blocks) {
  const std::size_t n = std::accumulate(blocks.begin(), blocks.end(), std::size_t{0});
  MatrixEndo m(ring, n);
  std::size_t offset = 0;
  for (std::size_t b : blocks) {
    for (std::size_t i = 0; i + 1 < b; ++i) m(offset + i, offset + i + 1) = ring.one();
    offset += b;
  }
  return m;
}

std::string blocks_string(const std::vector<std::size_t>& blocks) {
  std::string s = "jordan(";
  for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? "," : "") + str(blocks[i]);
  return s + ")";
}

/// E phi E^{-1} for a random product of elementary matrices E.
MatrixEndo random_conjugate(Generator& g, const MatrixEndo& phi) {
  MatrixEndo m = phi;
  const std::size_t n = m.size();
  if (n < 2) return m;
  for (int step = 0; step < 4; ++step) {
    std::size_t i = g.index(0, n - 1), j = g.index(0, n - 2);
    if (j >= i) ++j;
    const RingElement c = g.element(m.ring());
    // rows: r_i += c r_j; columns: c_j -= c c_i.
    for (std::size_t k = 0; k < n; ++k) m(i, k) += c * m(j, k);
    for (std::size_t k = 0; k < n; ++k) m(k, j) -= c * m(k, i);
  }
  return m;
}

// --- witt-axioms ------------------------------------------------------------

std::vector<Property> witt_axioms(const SuiteOptions& o) {
  const RingSpec ring = o.ring;
  const std::size_t n = o.precision;
  std::vector<Property> ps;
  auto triple = [=](Generator& g) {
    return std::array<WittVector, 3>{g.witt(ring, n), g.witt(ring, n), g.witt(ring, n)};
  };
  ps.push_back({"add_associative", [=](Generator& g, std::size_t) {
                  auto [x, y, z] = triple(g);
                  return verdict((x + y) + z == x + (y + z),
                                 {{"x", x.to_string()}, {"y", y.to_string()}, {"z", z.to_string()}});
                }});
  ps.push_back({"add_commutative", [=](Generator& g, std::size_t) {
                  auto x = g.witt(ring, n), y = g.witt(ring, n);
                  return verdict(x + y == y + x, {{"x", x.to_string()}, {"y", y.to_string()}});
                }});
  ps.push_back({"add_identity_and_inverse", [=](Generator& g, std::size_t) {
                  auto x = g.witt(ring, n);
                  const auto zero = WittVector::zero(ring, n);
                  return verdict(x + zero == x && x + (-x) == zero, {{"x", x.to_string()}});
                }});
  ps.push_back({"mul_associative", [=](Generator& g, std::size_t) {
                  auto [x, y, z] = triple(g);
                  return verdict(witt_mul(witt_mul(x, y), z) == witt_mul(x, witt_mul(y, z)),
                                 {{"x", x.to_string()}, {"y", y.to_string()}, {"z", z.to_string()}});
                }});
  ps.push_back({"mul_commutative", [=](Generator& g, std::size_t) {
                  auto x = g.witt(ring, n), y = g.witt(ring, n);
                  return verdict(witt_mul(x, y) == witt_mul(y, x), {{"x", x.to_string()}, {"y", y.to_string()}});
                }});
  ps.push_back({"mul_identity_and_zero", [=](Generator& g, std::size_t) {
                  auto x = g.witt(ring, n);
                  const auto zero = WittVector::zero(ring, n);
                  return verdict(witt_mul(x, WittVector::one(ring, n)) == x && witt_mul(x, zero) == zero,
                                 {{"x", x.to_string()}});
                }});
  ps.push_back({"distributive", [=](Generator& g, std::size_t) {
                  auto [x, y, z] = triple(g);
                  return verdict(witt_mul(x, y + z) == witt_mul(x, y) + witt_mul(x, z),
                                 {{"x", x.to_string()}, {"y", y.to_string()}, {"z", z.to_string()}});
                }});
  ps.push_back({"teichmuller_multiplicative", [=](Generator& g, std::size_t) {
                  auto a = g.element(ring), b = g.element(ring);
                  return verdict(witt_mul(teichmuller(a, n), teichmuller(b, n)) == teichmuller(a * b, n),
                                 {{"a", a.to_string()}, {"b", b.to_string()}});
                }});
  ps.push_back({"int_scalar_is_repeated_sum", [=](Generator& g, std::size_t) {
                  auto x = g.witt(ring, n);
                  const std::int64_t m = g.integer(-3, 5);
                  WittVector sum = WittVector::zero(ring, n);
                  for (std::int64_t k = 0; k < std::abs(m); ++k) sum = sum + (m < 0 ? -x : x);
                  return verdict(int_scalar(m, x) == sum && witt_mul(int_scalar(m, WittVector::one(ring, n)), x) == sum,
                                 {{"x", x.to_string()}, {"m", std::to_string(m)}});
                }});
  return ps;
}

// --- frobenius-verschiebung -------------------------------------------------

std::vector<Property> frobenius_verschiebung(const SuiteOptions& o) {
  const RingSpec ring = o.ring;
  const std::size_t n = o.precision;
  std::vector<Property> ps;
  ps.push_back({"fn_vn_is_multiplication_by_n", [=](Generator& g, std::size_t) {
                  auto x = g.witt(ring, n);
                  const std::size_t k = g.index(1, 6);
                  const auto lhs = frobenius(k, verschiebung(k, x)).truncate(n);
                  return verdict(lhs == int_scalar(static_cast<std::int64_t>(k), x),
                                 {{"x", x.to_string()}, {"n", str(k)}});
                }});
  ps.push_back({"fm_vn_commute_when_coprime", [=](Generator& g, std::size_t) {
                  auto x = g.witt(ring, n);
                  const std::size_t k = g.index(1, 6), m = draw_coprime(g, k, 1, 6);
                  return verdict(frobenius(m, verschiebung(k, x)) == verschiebung(k, frobenius(m, x)),
                                 {{"x", x.to_string()}, {"m", str(m)}, {"n", str(k)}});
                }});
  ps.push_back({"fm_fn_is_fmn", [=](Generator& g, std::size_t) {
                  auto x = g.witt(ring, n);
                  const std::size_t k = g.index(1, 6), m = g.index(1, 6);
                  // F_n x is exact to n/k; F_m of it agrees with F_{mn} x up to N/m.
                  const std::size_t keep = n / m;
                  return verdict(frobenius(m, frobenius(k, x)).truncate(keep) == frobenius(m * k, x).truncate(keep),
                                 {{"x", x.to_string()}, {"m", str(m)}, {"n", str(k)}});
                }});
  ps.push_back({"vm_vn_is_vmn", [=](Generator& g, std::size_t) {
                  auto x = g.witt(ring, n);
                  const std::size_t k = g.index(1, 6), m = g.index(1, 6);
                  return verdict(verschiebung(m, verschiebung(k, x)) == verschiebung(m * k, x),
                                 {{"x", x.to_string()}, {"m", str(m)}, {"n", str(k)}});
                }});
  ps.push_back({"fn_on_teichmuller", [=](Generator& g, std::size_t) {
                  auto a = g.element(ring);
                  const std::size_t k = g.index(1, 6);
                  return verdict(frobenius(k, teichmuller(a, n)) == teichmuller(a.pow(k), n),
                                 {{"a", a.to_string()}, {"n", str(k)}});
                }});
  ps.push_back({"vn_additive", [=](Generator& g, std::size_t) {
                  auto x = g.witt(ring, n), y = g.witt(ring, n);
                  const std::size_t k = g.index(1, 6);
                  return verdict(verschiebung(k, x + y) == verschiebung(k, x) + verschiebung(k, y),
                                 {{"x", x.to_string()}, {"y", y.to_string()}, {"n", str(k)}});
                }});
  ps.push_back({"fn_ring_homomorphism", [=](Generator& g, std::size_t) {
                  auto x = g.witt(ring, n), y = g.witt(ring, n);
                  const std::size_t k = g.index(1, 6), keep = n / k;
                  const bool additive = frobenius(k, x + y).truncate(keep) == (frobenius(k, x) + frobenius(k, y)).truncate(keep);
                  const bool multiplicative =
                      frobenius(k, witt_mul(x, y)).truncate(keep) == witt_mul(frobenius(k, x), frobenius(k, y)).truncate(keep);
                  const bool unital = frobenius(k, WittVector::one(ring, n)) == WittVector::one(ring, n);
                  return verdict(additive && multiplicative && unital,
                                 {{"x", x.to_string()}, {"y", y.to_string()}, {"n", str(k)}});
                }});
  return ps;
}

// --- projection-formula -----------------------------------------------------

std::vector<Property> projection_formula(const SuiteOptions& o) {
  const RingSpec ring = o.ring;
  const std::size_t n = o.precision;
  std::vector<Property> ps;
  ps.push_back({"witt_projection_formula", [=](Generator& g, std::size_t) {
                  auto x = g.witt(ring, n), y = g.witt(ring, n);
                  const std::size_t l = g.index(1, 4);
                  const auto lhs = witt_mul(x, verschiebung(l, y));
                  const auto rhs = verschiebung(l, witt_mul(frobenius(l, x), y)).truncate(n);
                  return verdict(lhs == rhs, {{"x", x.to_string()}, {"y", y.to_string()}, {"l", str(l)}});
                }});
  ps.push_back({"k0_frobenius_monoidal", [=](Generator& g, std::size_t) {
                  auto phi = g.matrix(ring, 0, 3), psi = g.matrix(ring, 0, 3);
                  const std::size_t l = g.index(1, 3);
                  const auto lhs = k0_class(endo_frobenius(l, endo_tensor(phi, psi)));
                  const auto rhs = k0_class(endo_tensor(endo_frobenius(l, phi), endo_frobenius(l, psi)));
                  return verdict(k0_eq(lhs, rhs), {{"phi", phi.to_string()}, {"psi", psi.to_string()}, {"l", str(l)}});
                }});
  ps.push_back({"k0_projection_formula", [=](Generator& g, std::size_t) {
                  auto phi = g.matrix(ring, 0, 3), psi = g.matrix(ring, 0, 3);
                  const std::size_t l = g.index(1, 3);
                  const auto lhs = k0_class(endo_tensor(phi, endo_verschiebung(l, psi)));
                  const auto rhs = k0_class(endo_verschiebung(l, endo_tensor(endo_frobenius(l, phi), psi)));
                  return verdict(k0_eq(lhs, rhs), {{"phi", phi.to_string()}, {"psi", psi.to_string()}, {"l", str(l)}});
                }});
  return ps;
}

// --- verfrob-fp -------------------------------------------------------------

std::vector<Property> verfrob_fp(const SuiteOptions& o) {
  if (o.ring.kind() != RingKind::PrimeField)
    throw Error("suite verfrob-fp needs a prime field (Fp:<p>), got " + o.ring.to_string());
  const RingSpec ring = o.ring;
  const std::size_t n = o.precision;
  std::vector<Property> ps;
  for (unsigned l : {1u, 2u}) {
    const std::size_t q = ipow(ring.modulus(), l);
    ps.push_back({"v_q_f_q_is_q_for_q_" + str(q), [=](Generator& g, std::size_t) {
                    auto x = g.witt(ring, n);
                    const auto lhs = verschiebung(q, frobenius(q, x)).truncate(n);
                    return verdict(lhs == int_scalar(static_cast<std::int64_t>(q), x), {{"x", x.to_string()}});
                  }});
  }
  return ps;
}

// --- invert-int -------------------------------------------------------------

std::vector<Property> invert_int(const SuiteOptions& o) {
  const RingSpec ring = o.ring;
  const std::size_t n = o.precision;
  std::vector<Property> ps;
  for (std::int64_t l : {2, 3, 5}) {
    if (!ring.from_int(l).is_unit()) continue;
    const std::string tag = std::to_string(l);
    ps.push_back({"inverse_of_" + tag + "_times_" + tag + "_is_one",
                  [=](Generator&, std::size_t) {
                    const auto a = witt_inverse_of_integer(l, n, ring);
                    const auto one = WittVector::one(ring, n);
                    const bool power = a.carrier().pow(l) == one.carrier();
                    const bool product = witt_mul(a, int_scalar(l, one)) == one;
                    return verdict(power && product, {{"a", a.to_string()}, {"l", tag}});
                  },
                  1});
    ps.push_back({"inverse_of_" + tag + "_cancels_scaling", [=](Generator& g, std::size_t) {
                    auto x = g.witt(ring, n);
                    const auto a = witt_inverse_of_integer(l, n, ring);
                    return verdict(witt_mul(a, int_scalar(l, x)) == x, {{"x", x.to_string()}, {"l", tag}});
                  }});
  }
  if (ps.empty()) throw Error("suite invert-int: none of 2, 3, 5 is a unit in " + ring.to_string());
  return ps;
}

// --- almkvist-functoriality -------------------------------------------------

std::vector<Property> almkvist_functoriality(const SuiteOptions& o) {
  const RingSpec ring = o.ring;
  const std::size_t n = o.precision;
  std::vector<Property> ps;
  ps.push_back({"char_series_intertwines_frobenius", [=](Generator& g, std::size_t) {
                  auto phi = g.matrix(ring, 0, 5);
                  const std::size_t l = g.index(1, 4);
                  const auto lhs = char_series(endo_frobenius(l, phi)).to_series(n);
                  // F_l of the expansion, exact to precision n when the input has precision l*n.
                  const auto rhs = frobenius(l, WittVector(char_series(phi).to_series(l * n))).truncate(n);
                  const bool rational = rw_eq(RationalWitt(char_series(endo_frobenius(l, phi))),
                                              rw_frobenius(l, RationalWitt(char_series(phi))));
                  return verdict(lhs == rhs.carrier() && rational, {{"phi", phi.to_string()}, {"l", str(l)}});
                }});
  ps.push_back({"char_series_intertwines_verschiebung", [=](Generator& g, std::size_t) {
                  auto phi = g.matrix(ring, 0, 5);
                  const std::size_t l = g.index(1, 4);
                  const auto lhs = char_series(endo_verschiebung(l, phi));
                  const auto via_witt = verschiebung(l, WittVector(char_series(phi).to_series(n)));
                  return verdict(lhs == char_series(phi).substitute(l) && lhs.to_series(l * n) == via_witt.carrier(),
                                 {{"phi", phi.to_string()}, {"l", str(l)}});
                }});
  ps.push_back({"k0_additive_and_multiplicative", [=](Generator& g, std::size_t) {
                  auto phi = g.matrix(ring, 0, 4), psi = g.matrix(ring, 0, 4);
                  const bool sum = k0_eq(k0_class(endo_direct_sum(phi, psi)), k0_class(phi) + k0_class(psi));
                  const bool product = k0_eq(k0_class(endo_tensor(phi, psi)), k0_class(phi) * k0_class(psi));
                  return verdict(sum && product, {{"phi", phi.to_string()}, {"psi", psi.to_string()}});
                }});
  ps.push_back({"rw_expand_ring_homomorphism", [=](Generator& g, std::size_t) {
                  auto x = g.rational_witt(ring, 3), y = g.rational_witt(ring, 3);
                  const bool add = rw_expand(x + y, n) == rw_expand(x, n) + rw_expand(y, n);
                  const bool neg = rw_expand(-x, n) == -rw_expand(x, n);
                  const bool mul = rw_expand(rw_mul(x, y), n) == witt_mul(rw_expand(x, n), rw_expand(y, n));
                  return verdict(add && neg && mul, {{"x", x.to_string()}, {"y", y.to_string()}});
                }});
  ps.push_back({"rw_semilinear_matches_witt", [=](Generator& g, std::size_t) {
                  auto x = g.rational_witt(ring, 3);
                  const std::size_t l = g.index(1, 4);
                  const bool frob = rw_expand(rw_frobenius(l, x), n) == frobenius(l, rw_expand(x, l * n)).truncate(n);
                  const bool versch = rw_expand(rw_verschiebung(l, x), l * n) == verschiebung(l, rw_expand(x, n));
                  return verdict(frob && versch, {{"x", x.to_string()}, {"l", str(l)}});
                }});
  return ps;
}

// --- ghost-oracle -----------------------------------------------------------

std::vector<Property> ghost_oracle(const SuiteOptions& o) {
  const RingSpec ring = o.ring;
  const std::size_t n = o.precision;
  std::vector<Property> ps;
  ps.push_back({"ghost_routes_agree", [=](Generator& g, std::size_t) {
                  auto x = g.witt(ring, n);
                  return verdict(ghost(x) == ghost_log_derivative(x), {{"x", x.to_string()}});
                }});
  if (ring.is_torsion_free()) {
    auto pointwise = [](const std::vector<RingElement>& a, const std::vector<RingElement>& b, bool multiply) {
      std::vector<RingElement> out;
      for (std::size_t i = 0; i < a.size(); ++i) out.push_back(multiply ? a[i] * b[i] : a[i] + b[i]);
      return out;
    };
    ps.push_back({"ghost_additive", [=](Generator& g, std::size_t) {
                    auto x = g.witt(ring, n), y = g.witt(ring, n);
                    return verdict(ghost_log_derivative(x + y) == pointwise(ghost(x), ghost(y), false),
                                   {{"x", x.to_string()}, {"y", y.to_string()}});
                  }});
    ps.push_back({"ghost_multiplicative", [=](Generator& g, std::size_t) {
                    auto x = g.witt(ring, n), y = g.witt(ring, n);
                    const auto prod = witt_mul(x, y);
                    const auto expected = pointwise(ghost_log_derivative(x), ghost_log_derivative(y), true);
                    return verdict(ghost(prod) == expected && ghost_log_derivative(prod) == expected,
                                   {{"x", x.to_string()}, {"y", y.to_string()}});
                  }});
    ps.push_back({"ghost_of_verschiebung_and_frobenius", [=](Generator& g, std::size_t) {
                    auto x = g.witt(ring, n);
                    const std::size_t k = g.index(1, 4);
                    const auto gx = ghost_log_derivative(x);
                    const auto gv = ghost(verschiebung(k, x));
                    const auto gf = ghost(frobenius(k, x));
                    bool ok = true;
                    for (std::size_t m = 1; m <= gv.size(); ++m) {
                      const RingElement expected =
                          m % k == 0 ? ring.from_int(static_cast<long>(k)) * gx[m / k - 1] : ring.zero();
                      ok = ok && gv[m - 1] == expected;
                    }
                    for (std::size_t m = 1; m * k <= n; ++m) ok = ok && gf[m - 1] == gx[m * k - 1];
                    return verdict(ok, {{"x", x.to_string()}, {"n", str(k)}});
                  }});
  } else {
    ps.push_back({"mul_transports_from_integers", [=](Generator& g, std::size_t) {
                    auto x = g.witt(ring, n), y = g.witt(ring, n);
                    const auto via_z = witt_mul(WittVector(lift_series(x.carrier())), WittVector(lift_series(y.carrier())));
                    return verdict(witt_mul(x, y).carrier() == reduce_series(via_z.carrier(), ring),
                                   {{"x", x.to_string()}, {"y", y.to_string()}});
                  }});
    ps.push_back({"frobenius_transports_from_integers", [=](Generator& g, std::size_t) {
                    auto x = g.witt(ring, n);
                    const std::size_t k = g.index(1, 4);
                    const auto via_z = frobenius(k, WittVector(lift_series(x.carrier())));
                    return verdict(frobenius(k, x).carrier() == reduce_series(via_z.carrier(), ring),
                                   {{"x", x.to_string()}, {"n", str(k)}});
                  }});
  }
  return ps;
}

// --- torsion-mechanism ------------------------------------------------------

std::vector<Property> torsion_mechanism(const SuiteOptions& o) {
  if (o.ring.kind() != RingKind::PrimeField)
    throw Error("suite torsion-mechanism needs a prime field (Fp:<p>), got " + o.ring.to_string());
  const RingSpec ring = o.ring;
  std::vector<std::vector<std::size_t>> all;
  for (std::size_t r = 1; r <= 4; ++r) {
    std::vector<std::size_t> prefix;
    partitions(r, r, prefix, all);
  }
  std::vector<Property> ps;
  for (unsigned l : {1u, 2u}) {
    const std::size_t q = ipow(ring.modulus(), l);
    const auto qi = static_cast<std::int64_t>(q);
    std::vector<std::vector<std::size_t>> killed;
    for (const auto& b : all)
      if (b.front() <= q) killed.push_back(b);
    const std::string tag = "_q_" + str(q);

    ps.push_back({"frobenius_kills_bounded_nilpotents" + tag,
                  [=](Generator&, std::size_t i) {
                    const MatrixEndo phi = jordan_nilpotent(ring, killed[i]);
                    const bool index_ok = nilpotency_index(phi) == killed[i].front();
                    return verdict(index_ok && endo_frobenius(q, phi).is_zero() && char_series(phi).is_one(),
                                   {{"phi", blocks_string(killed[i])}});
                  },
                  killed.size()});
    ps.push_back({"vf_is_multiplication_on_nilpotents" + tag,
                  [=](Generator&, std::size_t i) {
                    const MatrixEndo phi = jordan_nilpotent(ring, killed[i]);
                    const auto lhs = end0_projection(k0_class(endo_verschiebung(q, endo_frobenius(q, phi))));
                    const auto rhs = int_scalar(qi, end0_projection(k0_class(phi)));
                    return verdict(k0_eq(lhs, rhs), {{"phi", blocks_string(killed[i])}});
                  },
                  killed.size()});
    ps.push_back({"frobenius_kills_conjugated_nilpotents" + tag, [=](Generator& g, std::size_t) {
                    const auto& blocks = killed[g.index(0, killed.size() - 1)];
                    const MatrixEndo phi = random_conjugate(g, jordan_nilpotent(ring, blocks));
                    return verdict(endo_frobenius(q, phi).is_zero() && char_series(phi).is_one(),
                                   {{"phi", phi.to_string()}});
                  }});
    // V_q F_q on a size r matrix has size q*r; keep Berkowitz on it small.
    const std::size_t max_size = std::clamp<std::size_t>(48 / q, 1, 3);
    ps.push_back({"vf_is_multiplication_in_end0" + tag, [=](Generator& g, std::size_t) {
                    const MatrixEndo phi = g.matrix(ring, 0, max_size);
                    const auto lhs = end0_projection(k0_class(endo_verschiebung(q, endo_frobenius(q, phi))));
                    const auto rhs = int_scalar(qi, end0_projection(k0_class(phi)));
                    return verdict(k0_eq(lhs, rhs), {{"phi", phi.to_string()}});
                  }});
  }
  return ps;
}

// --- registry and runner ----------------------------------------------------

struct SuiteDef {
  std::string name;
  std::vector<Property> (*build)(const SuiteOptions&);
};

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> suites{
      {"witt-axioms", witt_axioms},
      {"frobenius-verschiebung", frobenius_verschiebung},
      {"projection-formula", projection_formula},
      {"verfrob-fp", verfrob_fp},
      {"invert-int", invert_int},
      {"almkvist-functoriality", almkvist_functoriality},
      {"ghost-oracle", ghost_oracle},
      {"torsion-mechanism", torsion_mechanism},
  };
  return suites;
}

PropertyResult run_property(const Property& p, std::uint64_t stream, const SuiteOptions& o) {
  const std::size_t cases = p.cases.value_or(o.trials);
  std::vector<Outcome> outcomes(cases);
  auto one = [&](std::size_t t) {
    Generator g(o.seed, stream, t);
    try {
      outcomes[t] = p.check(g, t);
    } catch (const std::exception& e) {
      outcomes[t] = std::string("exception: ") + e.what();
    }
  };
  if (o.execution == Execution::Parallel) {
    const long n = static_cast<long>(cases);
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < n; ++t) one(static_cast<std::size_t>(t));
  } else {
    for (std::size_t t = 0; t < cases; ++t) one(t);
  }

  PropertyResult r{p.name, 0, 0, std::nullopt};
  for (std::size_t t = 0; t < cases; ++t) {
    if (!outcomes[t]) {
      ++r.passed;
      continue;
    }
    ++r.failed;
    if (!r.counterexample) r.counterexample = "trial " + std::to_string(t) + ": " + *outcomes[t];
  }
  return r;
}

void run_into(SuiteReport& report, std::size_t suite_index, const std::vector<Property>& props,
              const SuiteOptions& o, const std::string& prefix) {
  for (std::size_t i = 0; i < props.size(); ++i) {
    PropertyResult r = run_property(props[i], suite_index * 1000 + i, o);
    r.name = prefix + r.name;
    report.properties.push_back(std::move(r));
  }
}

}  // namespace

bool SuiteReport::ok() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.failed == 0; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : registry()) v.push_back(s.name);
    v.push_back("all");
    return v;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  if (options.precision < 1) throw Error("verification suites need precision >= 1");
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report{std::string(name), options, {}, {}, 0};
  const auto& suites = registry();
  if (name == "all") {
    for (std::size_t i = 0; i < suites.size(); ++i) {
      std::vector<Property> props;
      try {
        props = suites[i].build(options);
      } catch (const Error& e) {
        report.skipped.emplace_back(suites[i].name, e.what());
        continue;
      }
      run_into(report, i, props, options, suites[i].name + "/");
    }
  } else {
    const auto it = std::find_if(suites.begin(), suites.end(), [&](const SuiteDef& s) { return s.name == name; });
    if (it == suites.end()) throw Error("unknown suite '" + std::string(name) + "'");
    run_into(report, static_cast<std::size_t>(it - suites.begin()), it->build(options), options, "");
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace wittkit
