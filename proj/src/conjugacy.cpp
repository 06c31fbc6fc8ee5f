#include "braidquot/conjugacy.hpp"

#include <algorithm>
#include <map>

#include "braidquot/errors.hpp"

namespace braidquot {

FiberCoordinates fiber_coordinates(const Element& u, const Element& base) {
  if (u.degree() != base.degree())
    throw SizeMismatch("fiber coordinates across strand counts");
  if (!(u.perm() == base.perm()))
    throw FiberMismatch("elements lie over different permutations: " +
                        u.perm().str() + " vs " + base.perm().str());
  return {base, (base.inverse() * u).pure_exponents()};
}

CentralizerEnumeration::CentralizerEnumeration(const Permutation& theta)
    : n_(theta.degree()) {
  std::map<int, std::vector<std::vector<int>>> by_len;
  for (auto& c : theta.cycles()) by_len[static_cast<int>(c.size())].push_back(c);
  for (auto& [len, cycles] : by_len) groups_.push_back(std::move(cycles));
}

unsigned long long CentralizerEnumeration::size() const {
  unsigned __int128 total = 1;
  for (const auto& g : groups_) {
    auto len = static_cast<unsigned __int128>(g.front().size());
    for (size_t i = 0; i < g.size(); ++i) {
      total *= len;
      total *= static_cast<unsigned __int128>(i + 1);
    }
  }
  if (total > static_cast<unsigned __int128>(~0ULL))
    throw DomainError("centralizer too large to index in 64 bits");
  return static_cast<unsigned long long>(total);
}

Permutation CentralizerEnumeration::operator[](unsigned long long idx) const {
  if (idx >= size()) throw DomainError("centralizer index out of range");
  std::vector<int> img(static_cast<size_t>(n_));
  unsigned long long rem = idx;
  for (const auto& g : groups_) {
    const auto m = g.size();
    const auto len = static_cast<unsigned long long>(g.front().size());
    // Rotation offsets (fastest digits), then the block permutation.
    std::vector<unsigned long long> offs(m);
    for (size_t i = 0; i < m; ++i) {
      offs[i] = rem % len;
      rem /= len;
    }
    unsigned long long fact = 1;
    for (size_t i = 2; i <= m; ++i) fact *= i;
    unsigned long long rank = rem % fact;
    rem /= fact;
    // Lexicographic unranking of the block permutation tau of {0..m-1}.
    std::vector<int> pool(m);
    for (size_t i = 0; i < m; ++i) pool[i] = static_cast<int>(i);
    std::vector<int> tau(m);
    for (size_t i = 0; i < m; ++i) {
      fact = 1;
      for (size_t t = 2; t <= m - 1 - i; ++t) fact *= t;
      auto pick = static_cast<size_t>(rank / fact);
      rank %= fact;
      tau[i] = pool[pick];
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    for (size_t i = 0; i < m; ++i) {
      const auto& src = g[i];
      const auto& dst = g[static_cast<size_t>(tau[i])];
      for (size_t t = 0; t < src.size(); ++t)
        img[static_cast<size_t>(src[t]) - 1] =
            dst[(t + offs[i]) % src.size()];
    }
  }
  return Permutation::from_images(std::move(img));
}

std::vector<Permutation> CentralizerEnumeration::all() const {
  std::vector<Permutation> out;
  unsigned long long total = size();
  out.reserve(static_cast<size_t>(total));
  for (unsigned long long t = 0; t < total; ++t) out.push_back((*this)[t]);
  return out;
}

NormalForm orbit_normal_form(const Element& u, const Element& base) {
  FiberCoordinates fc = fiber_coordinates(u, base);
  OrbitDecomposition dec(base.perm().inverse());
  std::vector<long long> sums = dec.orbit_sums(fc.a);
  Element nf = base * Element::from_pure(dec.at_representatives(sums));
  // The witness solves x(theta p) - x(p) = S*[p == rep] - a(p); the orbit
  // sums of the right side vanish by construction.
  PairVector d = dec.at_representatives(sums) - fc.a;
  auto x = solve_translation_system(dec.theta(), d);
  if (!x) throw InternalError("normal-form system unexpectedly unsolvable");
  Element witness = Element::from_pure(*x);
  if (!(conjugate(witness, u) == nf))
    throw InternalError("normal-form witness failed verification");
  return {nf, witness};
}

bool conjugation_condition_check(const Element& base, const Permutation& C,
                                 const PairVector& z, const PairVector& b) {
  const Permutation theta = base.perm().inverse();
  if (!C.commutes_with(theta))
    throw NotInCentralizer("permutation " + C.str() +
                           " does not centralize " + theta.str());
  OrbitDecomposition dec(theta);
  if (!dec.supported_on_transversal(z) || !dec.supported_on_transversal(b))
    throw DomainError("exponent vectors must be supported on the transversal");

  Element lift = section(C);
  PairVector c = fiber_coordinates(conjugate(lift, base), base).a;
  std::vector<long long> csums = dec.orbit_sums(c);

  for (const auto& orbit : dec.orbits()) {
    auto [t, q] = orbit.front();
    int own = dec.orbit_index(t, q);
    long long rhs = b.at(t, q);
    auto pre = pair_action(C.inverse(), {t, q});
    long long lhs;
    if (dec.orbit_index(pre.first, pre.second) != own) {
      // The orbit moves: z is read at the representative of the image orbit.
      auto img = pair_action(C, {t, q});
      auto rep = dec.representative(img.first, img.second);
      lhs = csums[static_cast<size_t>(own)] + z.at(rep.first, rep.second);
    } else {
      // The orbit is fixed by C: z contributes at this orbit's own entry.
      lhs = csums[static_cast<size_t>(own)] + z.at(t, q);
    }
    if (lhs != rhs) return false;
  }
  return true;
}

nlohmann::ordered_json ConjugacyCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["verdict"] = conjugate ? "conjugate" : "not_conjugate";
  if (witness)
    j["witness_word"] = witness->to_word().str();
  else
    j["witness_word"] = nullptr;
  j["tested_centralizer_elements"] = tested_centralizer_elements;
  return j;
}

ConjugacyCertificate are_conjugate(const Element& u, const Element& v) {
  if (u.degree() != v.degree())
    throw SizeMismatch("conjugacy across strand counts");
  if (u.perm().cycle_type() != v.perm().cycle_type())
    return {false, std::nullopt, Refutation::cycle_type_mismatch, 0};

  // Align the permutations once; afterwards scan pure-times-lift conjugators.
  Permutation rho = conjugating_permutation(u.perm(), v.perm());
  Element g0 = section(rho);
  Element u1 = conjugate(g0, u);
  Element base = section(v.perm());
  const Permutation theta = v.perm().inverse();
  OrbitDecomposition dec(theta);
  PairVector b = fiber_coordinates(v, base).a;

  CentralizerEnumeration cent(theta);
  const unsigned long long total = cent.size();
  for (unsigned long long idx = 0; idx < total; ++idx) {
    Element lift = section(cent[idx]);
    PairVector d = fiber_coordinates(conjugate(lift, u1), base).a;
    auto x = solve_translation_system(theta, b - d);
    if (!x) continue;
    Element witness = Element::from_pure(*x) * lift * g0;
    if (!(conjugate(witness, u) == v))
      throw InternalError("conjugacy witness failed verification");
    return {true, witness, std::nullopt, idx + 1};
  }
  return {false, std::nullopt, Refutation::centralizer_exhausted, total};
}

std::optional<long long> order_of(const Element& u) {
  long long m = u.perm().order();
  if (u.pow(m).is_identity()) return m;
  return std::nullopt;
}

bool finite_order_by_orbit_sums(const Element& u) {
  OrbitDecomposition dec(u.perm());
  for (long long s : dec.orbit_sums(u.cross()))
    if (s != 0) return false;
  return true;
}

Permutation canonical_cycle_permutation(const Permutation& pi) {
  auto cycles = pi.cycles();
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<int> img(static_cast<size_t>(pi.degree()));
  int k = 1;
  for (const auto& c : cycles) {
    const int len = static_cast<int>(c.size());
    // Block cycle (k, k+len-1, k+len-2, ..., k+1).
    img[static_cast<size_t>(k) - 1] = k + len - 1;
    for (int t = 1; t < len; ++t) img[static_cast<size_t>(k + t) - 1] = k + t - 1;
    k += len;
  }
  return Permutation::from_images(std::move(img));
}

Permutation conjugating_permutation(const Permutation& from, const Permutation& to) {
  if (from.degree() != to.degree())
    throw SizeMismatch("aligning permutations of different degrees");
  if (from.cycle_type() != to.cycle_type())
    throw DomainError("cycle types differ; no conjugating permutation exists");
  auto fc = from.cycles();
  auto tc = to.cycles();
  auto by_len_desc = [](const auto& a, const auto& b) { return a.size() > b.size(); };
  std::stable_sort(fc.begin(), fc.end(), by_len_desc);
  std::stable_sort(tc.begin(), tc.end(), by_len_desc);
  // rho * from * rho^{-1} relabels each cycle entry through rho^{-1}, so
  // sending the t-th entry of each target cycle to the t-th entry of the
  // matching source cycle does the job.
  std::vector<int> img(static_cast<size_t>(from.degree()));
  for (size_t i = 0; i < fc.size(); ++i)
    for (size_t t = 0; t < fc[i].size(); ++t)
      img[static_cast<size_t>(tc[i][t]) - 1] = fc[i][t];
  Permutation rho = Permutation::from_images(std::move(img));
  if (!(rho.then(from).then(rho.inverse()) == to))
    throw InternalError("cycle alignment produced a wrong conjugator");
  return rho;
}

Element canonical_representative(const Element& u) {
  const Permutation target = canonical_cycle_permutation(u.perm());
  Permutation rho = conjugating_permutation(u.perm(), target);
  Element u1 = conjugate(section(rho), u);
  Element base = section(target);
  const Permutation theta = target.inverse();
  OrbitDecomposition dec(theta);

  CentralizerEnumeration cent(theta);
  const unsigned long long total = cent.size();
  std::optional<std::vector<long long>> best;
  for (unsigned long long idx = 0; idx < total; ++idx) {
    Element lift = section(cent[idx]);
    PairVector a = fiber_coordinates(conjugate(lift, u1), base).a;
    std::vector<long long> sums = dec.orbit_sums(a);
    if (!best || sums < *best) best = std::move(sums);
  }
  return base * Element::from_pure(dec.at_representatives(*best));
}

}  // namespace braidquot
