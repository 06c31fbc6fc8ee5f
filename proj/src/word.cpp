#include "braidquot/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "braidquot/errors.hpp"

namespace braidquot {

namespace {

long long parse_int(std::string_view s, const std::string& tok, const char* what) {
  if (s.empty()) throw SyntaxError("missing " + std::string(what) + " in token '" + tok + "'");
  if (s.front() == '+') s.remove_prefix(1);  // from_chars accepts '-' but not '+'
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw SyntaxError("bad " + std::string(what) + " in token '" + tok + "'");
  return v;
}

}  // namespace

BraidWord::BraidWord(int n) : n_(n) {
  if (n < 2) throw DomainError("strand count must be >= 2");
}

void BraidWord::push_artin(int i, long long exponent) {
  if (i < 1 || i > n_ - 1)
    throw IndexError("Artin generator s" + std::to_string(i) +
                     " out of range for n=" + std::to_string(n_));
  if (exponent == 0) return;
  letters_.push_back({Letter::Kind::artin, i, 0, exponent});
}

void BraidWord::push_pure(int i, int j, long long exponent) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n_ || i == j)
    throw IndexError("band generator A" + std::to_string(i) + "," +
                     std::to_string(j) + " out of range for n=" + std::to_string(n_));
  if (exponent == 0) return;
  letters_.push_back({Letter::Kind::pure, i, j, exponent});
}

BraidWord BraidWord::parse(const std::string& text, int n) {
  BraidWord w(n);

  // '.' is a token separator that must occur singly between tokens, so split
  // on dots first and require every segment to hold at least one token --
  // unless the whole input is blank, which denotes the identity.
  std::vector<std::string> tokens;
  {
    std::vector<std::string> segments;
    std::string cur;
    for (char c : text) {
      if (c == '.') {
        segments.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    segments.push_back(cur);

    bool blank = segments.size() == 1 &&
                 segments[0].find_first_not_of(" \t") == std::string::npos;
    if (!blank) {
      for (const auto& seg : segments) {
        std::istringstream in(seg);
        std::string tok;
        size_t before = tokens.size();
        while (in >> tok) tokens.push_back(tok);
        if (tokens.size() == before)
          throw SyntaxError("misplaced '.' separator in \"" + text + "\"");
      }
    }
  }

  for (const std::string& tok : tokens) {
    std::string_view body = tok;
    long long exponent = 1;
    if (size_t caret = tok.find('^'); caret != std::string::npos) {
      if (tok.find('^', caret + 1) != std::string::npos)
        throw SyntaxError("repeated '^' in token '" + tok + "'");
      exponent = parse_int(std::string_view(tok).substr(caret + 1), tok, "exponent");
      body = std::string_view(tok).substr(0, caret);
    }
    if (body.size() < 2) throw SyntaxError("unrecognized token '" + tok + "'");
    if (body[0] == 's') {
      long long i = parse_int(body.substr(1), tok, "generator index");
      if (i < 1 || i > n - 1)
        throw IndexError("Artin generator in token '" + tok +
                         "' out of range for n=" + std::to_string(n));
      w.push_artin(static_cast<int>(i), exponent);
    } else if (body[0] == 'A') {
      size_t comma = body.find(',');
      if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos)
        throw SyntaxError("band token '" + tok + "' needs exactly one ','");
      long long i = parse_int(body.substr(1, comma - 1), tok, "strand index");
      long long j = parse_int(body.substr(comma + 1), tok, "strand index");
      if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw IndexError("band generator in token '" + tok +
                         "' out of range for n=" + std::to_string(n));
      w.push_pure(static_cast<int>(i), static_cast<int>(j), exponent);
    } else {
      throw SyntaxError("unrecognized token '" + tok + "'");
    }
  }
  return w;
}

std::string BraidWord::str() const {
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    if (l.kind == Letter::Kind::artin) {
      out += 's' + std::to_string(l.i);
    } else {
      out += 'A' + std::to_string(l.i) + ',' + std::to_string(l.j);
    }
    if (l.exponent != 1) out += '^' + std::to_string(l.exponent);
  }
  return out;
}

BraidWord BraidWord::expanded() const {
  BraidWord out(n_);
  for (const Letter& l : letters_) {
    if (l.kind == Letter::Kind::artin) {
      out.push_artin(l.i, l.exponent);
      continue;
    }
    for (int t = l.j - 1; t >= l.i + 1; --t) out.push_artin(t, 1);
    out.push_artin(l.i, 2 * l.exponent);
    for (int t = l.i + 1; t <= l.j - 1; ++t) out.push_artin(t, -1);
  }
  return out;
}

BraidWord BraidWord::operator+(const BraidWord& o) const {
  if (n_ != o.n_) throw SizeMismatch("concatenating words on different strand counts");
  BraidWord out = *this;
  out.letters_.insert(out.letters_.end(), o.letters_.begin(), o.letters_.end());
  return out;
}

BraidWord BraidWord::inverse() const {
  BraidWord out(n_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    Letter l = *it;
    l.exponent = -l.exponent;
    out.letters_.push_back(l);
  }
  return out;
}

}  // namespace braidquot
