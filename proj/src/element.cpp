#include "braidquot/element.hpp"

#include <utility>

#include "braidquot/errors.hpp"

namespace braidquot {

Element::Element(int n) : perm_(n), cross_(n) {}

Element::Element(Permutation perm, PairVector cross)
    : perm_(std::move(perm)), cross_(std::move(cross)) {
  if (perm_.degree() != cross_.degree())
    throw SizeMismatch("permutation and crossing vector disagree on degree");
}

Element Element::from_word(const BraidWord& w) {
  const int n = w.degree();
  // labels[pos] = starting position of the strand currently at pos.
  std::vector<int> labels(static_cast<size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) labels[static_cast<size_t>(i)] = i;
  PairVector cross(n);

  // One power of s_k: the strands at positions k, k+1 cross e times (same
  // unordered label pair each time), then sit swapped iff e is odd.
  auto apply_artin = [&](int k, long long e) {
    int a = labels[static_cast<size_t>(k)], b = labels[static_cast<size_t>(k) + 1];
    cross.at(a, b) += e;
    if (e % 2 != 0) std::swap(labels[static_cast<size_t>(k)], labels[static_cast<size_t>(k) + 1]);
  };

  for (const Letter& l : w.letters()) {
    if (l.kind == Letter::Kind::artin) {
      apply_artin(l.i, l.exponent);
    } else {
      for (int t = l.j - 1; t >= l.i + 1; --t) apply_artin(t, 1);
      apply_artin(l.i, 2 * l.exponent);
      for (int t = l.i + 1; t <= l.j - 1; ++t) apply_artin(t, -1);
    }
  }

  std::vector<int> img(static_cast<size_t>(n));
  for (int pos = 1; pos <= n; ++pos)
    img[static_cast<size_t>(labels[static_cast<size_t>(pos)]) - 1] = pos;
  return Element(Permutation::from_images(std::move(img)), std::move(cross));
}

Element Element::from_pure(const PairVector& exponents) {
  const int n = exponents.degree();
  PairVector cross(n);
  for (auto [i, j] : all_pairs(n)) cross.at(i, j) = 2 * exponents.at(i, j);
  return Element(Permutation(n), std::move(cross));
}

Element Element::operator*(const Element& h) const {
  if (degree() != h.degree())
    throw SizeMismatch("multiplying elements on different strand counts");
  const int n = degree();
  PairVector cross(n);
  for (auto [i, j] : all_pairs(n))
    cross.at(i, j) = cross_.at(i, j) + h.cross_.at(perm_(i), perm_(j));
  return Element(perm_.then(h.perm_), std::move(cross));
}

Element Element::inverse() const {
  const int n = degree();
  Permutation q = perm_.inverse();
  PairVector cross(n);
  for (auto [i, j] : all_pairs(n)) cross.at(i, j) = -cross_.at(q(i), q(j));
  return Element(std::move(q), std::move(cross));
}

Element Element::pow(long long k) const {
  Element base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  Element acc(degree());
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Element::is_identity() const {
  return perm_.is_identity() && cross_.is_zero();
}

PairVector Element::pure_exponents() const {
  if (!is_pure())
    throw NotPure("element with permutation " + perm_.str() + " is not pure");
  const int n = degree();
  PairVector m(n);
  for (auto [i, j] : all_pairs(n)) {
    long long c = cross_.at(i, j);
    if (c % 2 != 0)
      throw InternalError("pure element with odd crossing count; invariant broken");
    m.at(i, j) = c / 2;
  }
  return m;
}

bool Element::parity_consistent() const {
  for (auto [i, j] : all_pairs(degree())) {
    bool odd = cross_.at(i, j) % 2 != 0;
    bool swapped = perm_(i) > perm_(j);  // i < j here
    if (odd != swapped) return false;
  }
  return true;
}

BraidWord Element::to_word() const {
  BraidWord sw = section_word(perm_);
  Element pure = *this * Element::from_word(sw).inverse();
  PairVector m = pure.pure_exponents();
  BraidWord out(degree());
  for (auto [i, j, v] : m.nonzero()) out.push_pure(i, j, v);
  return out + sw;
}

nlohmann::ordered_json Element::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = degree();
  std::vector<int> img;
  for (int i = 1; i <= degree(); ++i) img.push_back(perm_(i));
  j["perm"] = img;
  auto cr = nlohmann::ordered_json::array();
  for (auto [a, b, v] : cross_.nonzero()) cr.push_back({a, b, v});
  j["cross"] = cr;
  return j;
}

Element Element::from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  std::vector<int> img = j.at("perm").get<std::vector<int>>();
  if (static_cast<int>(img.size()) != n)
    throw DomainError("perm image list length disagrees with n");
  PairVector cross(n);
  for (const auto& entry : j.at("cross")) {
    if (!entry.is_array() || entry.size() != 3)
      throw DomainError("cross entries must be [i, j, c] triples");
    cross.at(entry[0].get<int>(), entry[1].get<int>()) = entry[2].get<long long>();
  }
  return Element(Permutation::from_images(std::move(img)), std::move(cross));
}

BraidWord section_word(const Permutation& pi) {
  const int n = pi.degree();
  std::vector<int> a(static_cast<size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) a[static_cast<size_t>(i)] = pi(i);
  BraidWord w(n);
  for (int k = 2; k <= n; ++k) {
    int j = k;
    while (j > 1 && a[static_cast<size_t>(j) - 1] > a[static_cast<size_t>(j)]) {
      std::swap(a[static_cast<size_t>(j) - 1], a[static_cast<size_t>(j)]);
      w.push_artin(j - 1, 1);
      --j;
    }
  }
  return w;
}

Element section(const Permutation& pi) { return Element::from_word(section_word(pi)); }

namespace {
void check_delta_args(int r, int p, int n) {
  if (p < 3 || p % 2 == 0)
    throw DomainError("block length p must be odd and >= 3, got p=" + std::to_string(p));
  if (r < 0 || r + p > n)
    throw DomainError("block [r+1, r+p] must fit in 1..n (r=" + std::to_string(r) +
                      ", p=" + std::to_string(p) + ", n=" + std::to_string(n) + ")");
}
}  // namespace

BraidWord delta_word(int r, int p, int n) {
  check_delta_args(r, p, n);
  BraidWord w(n);
  for (int t = r + p - 1; t >= r + (p + 1) / 2; --t) w.push_artin(t, 1);
  for (int t = r + (p - 1) / 2; t >= r + 1; --t) w.push_artin(t, -1);
  return w;
}

Element delta(int r, int p, int n) { return Element::from_word(delta_word(r, p, n)); }

BraidWord alpha_word(int r, int p, int n) {
  if (p < 2) throw DomainError("block length p must be >= 2 for alpha");
  if (r < 0 || r + p > n)
    throw DomainError("block [r+1, r+p] must fit in 1..n (r=" + std::to_string(r) +
                      ", p=" + std::to_string(p) + ", n=" + std::to_string(n) + ")");
  BraidWord w(n);
  for (int t = r + 1; t <= r + p - 1; ++t) w.push_artin(t, 1);
  return w;
}

Element alpha(int r, int p, int n) { return Element::from_word(alpha_word(r, p, n)); }

}  // namespace braidquot
