#include "tlev/semver.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>

#include "tlev/error.hpp"

namespace tlev::semver {
namespace {

// Components beyond this would overflow when an upper bound adds one.
constexpr std::uint64_t kMaxComponent = std::numeric_limits<std::int64_t>::max();

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_char(char c) {
  return is_digit(c) || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '-';
}
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

[[noreturn]] void fail(std::string_view text, std::size_t pos, std::string_view what) {
  throw ParseError(fmt::format("{} at offset {} in '{}'", what, pos, text), pos);
}

// Reads a run of digits without leading zeros starting at `pos`.
std::uint64_t read_number(std::string_view text, std::size_t& pos, std::size_t base) {
  const std::size_t start = pos;
  while (pos < text.size() && is_digit(text[pos])) {
    ++pos;
  }
  if (pos == start) {
    fail(text, base + start, "expected numeric component");
  }
  if (pos - start > 1 && text[start] == '0') {
    fail(text, base + start, "leading zero in numeric component");
  }
  std::uint64_t value = 0;
  for (std::size_t i = start; i < pos; ++i) {
    const auto digit = static_cast<std::uint64_t>(text[i] - '0');
    if (value > (kMaxComponent - digit) / 10) {
      fail(text, base + start, "numeric component too large");
    }
    value = value * 10 + digit;
  }
  return value;
}

// Reads '.'-separated identifiers after a '-' or '+'.
std::vector<std::string> read_identifiers(std::string_view text, std::size_t& pos, std::size_t base,
                                          bool prerelease) {
  std::vector<std::string> out;
  while (true) {
    const std::size_t start = pos;
    while (pos < text.size() && is_ident_char(text[pos])) {
      ++pos;
    }
    if (pos == start) {
      fail(text, base + start, "empty identifier");
    }
    std::string ident(text.substr(start, pos - start));
    if (prerelease && ident.size() > 1 && ident[0] == '0' &&
        std::all_of(ident.begin(), ident.end(), is_digit)) {
      fail(text, base + start, "leading zero in numeric prerelease identifier");
    }
    out.push_back(std::move(ident));
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      continue;
    }
    return out;
  }
}

std::vector<Identifier> to_prerelease(const std::vector<std::string>& raw) {
  std::vector<Identifier> out;
  out.reserve(raw.size());
  for (const auto& s : raw) {
    if (std::all_of(s.begin(), s.end(), is_digit)) {
      std::uint64_t n = 0;
      bool overflow = false;
      for (char c : s) {
        const auto digit = static_cast<std::uint64_t>(c - '0');
        if (n > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
          overflow = true;
          break;
        }
        n = n * 10 + digit;
      }
      // Oversized numeric identifiers fall back to lexical comparison.
      out.push_back(overflow ? Identifier::from_text(s) : Identifier::from_number(n));
    } else {
      out.push_back(Identifier::from_text(s));
    }
  }
  return out;
}

// A version with possibly-missing trailing components ("1", "1.2", "1.x").
struct Partial {
  std::optional<std::uint64_t> major;
  std::optional<std::uint64_t> minor;
  std::optional<std::uint64_t> patch;
  std::vector<Identifier> prerelease;
  std::vector<std::string> build;

  [[nodiscard]] bool any_major() const { return !major; }
  [[nodiscard]] bool any_minor() const { return !minor; }
  [[nodiscard]] bool any_patch() const { return !patch; }

  [[nodiscard]] Version floor() const {
    Version v{major.value_or(0), minor.value_or(0), patch.value_or(0), {}, {}};
    if (patch) {
      v.prerelease = prerelease;
      v.build = build;
    }
    return v;
  }
};

Version make(std::uint64_t major, std::uint64_t minor, std::uint64_t patch) {
  return Version{major, minor, patch, {}, {}};
}

Partial parse_partial(std::string_view text, std::size_t base, std::string_view whole) {
  Partial p;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == 'v' || text[pos] == 'V' || text[pos] == '=')) {
    ++pos;
  }
  std::optional<std::uint64_t>* slots[] = {&p.major, &p.minor, &p.patch};
  bool wildcard_seen = false;
  for (int i = 0; i < 3; ++i) {
    if (pos >= text.size()) {
      if (i == 0) {
        fail(whole, base + pos, "expected version");
      }
      break;
    }
    const char c = text[pos];
    if (c == 'x' || c == 'X' || c == '*') {
      ++pos;
      wildcard_seen = true;
    } else if (is_digit(c)) {
      if (wildcard_seen) {
        fail(whole, base + pos, "numeric component after wildcard");
      }
      *slots[i] = read_number(text, pos, base);
    } else {
      fail(whole, base + pos, "unexpected character in version");
    }
    if (i < 2) {
      if (pos < text.size() && text[pos] == '.') {
        ++pos;
        if (pos >= text.size()) {
          fail(whole, base + pos, "trailing '.'");
        }
      } else {
        break;
      }
    }
  }
  if (pos < text.size() && text[pos] == '-') {
    if (!p.patch) {
      fail(whole, base + pos, "prerelease requires a full version");
    }
    ++pos;
    p.prerelease = to_prerelease(read_identifiers(text, pos, base, true));
  }
  if (pos < text.size() && text[pos] == '+') {
    ++pos;
    p.build = read_identifiers(text, pos, base, false);
  }
  if (pos != text.size()) {
    fail(whole, base + pos, "unexpected character in version");
  }
  return p;
}

ComparatorSet match_all() { return {Comparator{Op::GreaterEqual, make(0, 0, 0)}}; }
ComparatorSet match_none() { return {Comparator{Op::Less, make(0, 0, 0)}}; }

// Smallest version above every version the partial's wildcard covers.
Version next_after(const Partial& p) {
  if (p.any_minor()) {
    return make(*p.major + 1, 0, 0);
  }
  return make(*p.major, *p.minor + 1, 0);
}

ComparatorSet desugar_primitive(Op op, const Partial& p) {
  const bool full = !p.any_patch();
  if (p.any_major()) {
    switch (op) {
      case Op::Greater:
      case Op::Less:
        return match_none();
      default:
        return match_all();
    }
  }
  if (full) {
    if (op == Op::Equal) {
      return {Comparator{Op::Equal, p.floor()}};
    }
    return {Comparator{op, p.floor()}};
  }
  switch (op) {
    case Op::Equal:
      return {Comparator{Op::GreaterEqual, p.floor()}, Comparator{Op::Less, next_after(p)}};
    case Op::Greater:
      return {Comparator{Op::GreaterEqual, next_after(p)}};
    case Op::GreaterEqual:
      return {Comparator{Op::GreaterEqual, p.floor()}};
    case Op::Less:
      return {Comparator{Op::Less, p.floor()}};
    case Op::LessEqual:
      return {Comparator{Op::Less, next_after(p)}};
  }
  return match_none();
}

ComparatorSet desugar_tilde(const Partial& p) {
  if (p.any_major()) {
    return match_all();
  }
  if (p.any_minor()) {
    return {Comparator{Op::GreaterEqual, p.floor()}, Comparator{Op::Less, make(*p.major + 1, 0, 0)}};
  }
  return {Comparator{Op::GreaterEqual, p.floor()},
          Comparator{Op::Less, make(*p.major, *p.minor + 1, 0)}};
}

ComparatorSet desugar_caret(const Partial& p) {
  if (p.any_major()) {
    return match_all();
  }
  const std::uint64_t major = *p.major;
  Version upper;
  if (p.any_minor()) {
    upper = make(major + 1, 0, 0);
  } else if (major > 0) {
    upper = make(major + 1, 0, 0);
  } else if (p.any_patch() || *p.minor > 0) {
    upper = make(0, *p.minor + 1, 0);
  } else {
    upper = make(0, 0, *p.patch + 1);
  }
  return {Comparator{Op::GreaterEqual, p.floor()}, Comparator{Op::Less, upper}};
}

ComparatorSet desugar_hyphen(const Partial& low, const Partial& high) {
  ComparatorSet out;
  if (!low.any_major()) {
    out.push_back(Comparator{Op::GreaterEqual, low.floor()});
  }
  if (!high.any_major()) {
    if (high.any_patch()) {
      out.push_back(Comparator{Op::Less, next_after(high)});
    } else {
      out.push_back(Comparator{Op::LessEqual, high.floor()});
    }
  }
  if (out.empty()) {
    return match_all();
  }
  return out;
}

struct Word {
  std::string_view text;
  std::size_t offset;
};

std::vector<Word> split_words(std::string_view text, std::size_t base) {
  std::vector<Word> words;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) {
      ++pos;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !is_space(text[pos])) {
      ++pos;
    }
    if (pos > start) {
      words.push_back({text.substr(start, pos - start), base + start});
    }
  }
  return words;
}

bool is_operator_only(std::string_view w) {
  return w == "<" || w == "<=" || w == ">" || w == ">=" || w == "=" || w == "~" || w == "~>" ||
         w == "^";
}

ComparatorSet parse_simple(std::string_view word, std::size_t base, std::string_view whole) {
  std::size_t op_len = 0;
  enum class Kind { Primitive, Tilde, Caret } kind = Kind::Primitive;
  Op op = Op::Equal;
  if (word.starts_with("~>")) {
    kind = Kind::Tilde;
    op_len = 2;
  } else if (word.starts_with("~")) {
    kind = Kind::Tilde;
    op_len = 1;
  } else if (word.starts_with("^")) {
    kind = Kind::Caret;
    op_len = 1;
  } else if (word.starts_with(">=")) {
    op = Op::GreaterEqual;
    op_len = 2;
  } else if (word.starts_with("<=")) {
    op = Op::LessEqual;
    op_len = 2;
  } else if (word.starts_with(">")) {
    op = Op::Greater;
    op_len = 1;
  } else if (word.starts_with("<")) {
    op = Op::Less;
    op_len = 1;
  } else if (word.starts_with("=")) {
    op_len = 1;
  }
  std::size_t start = op_len;
  while (start < word.size() && is_space(word[start])) {
    ++start;
  }
  const Partial p = parse_partial(word.substr(start), base + start, whole);
  switch (kind) {
    case Kind::Tilde:
      return desugar_tilde(p);
    case Kind::Caret:
      return desugar_caret(p);
    case Kind::Primitive:
      break;
  }
  return desugar_primitive(op, p);
}

ComparatorSet parse_alternative(std::string_view text, std::size_t base, std::string_view whole) {
  std::vector<Word> raw = split_words(text, base);
  if (raw.empty()) {
    return match_all();
  }
  // Glue a detached operator (">= 1.2.3") to the version that follows it.
  std::vector<std::pair<std::string, std::size_t>> words;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (is_operator_only(raw[i].text)) {
      if (i + 1 >= raw.size()) {
        fail(whole, raw[i].offset, "operator without version");
      }
      words.emplace_back(std::string(raw[i].text) + std::string(raw[i + 1].text), raw[i].offset);
      ++i;
    } else {
      words.emplace_back(std::string(raw[i].text), raw[i].offset);
    }
  }
  if (words.size() == 3 && words[1].first == "-") {
    const Partial low = parse_partial(words[0].first, words[0].second, whole);
    const Partial high = parse_partial(words[2].first, words[2].second, whole);
    return desugar_hyphen(low, high);
  }
  ComparatorSet out;
  for (const auto& [w, offset] : words) {
    if (w == "-") {
      fail(whole, offset, "misplaced hyphen range");
    }
    ComparatorSet part = parse_simple(w, offset, whole);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool looks_unsupported(std::string_view trimmed) {
  static constexpr std::string_view kPrefixes[] = {"git+", "git:", "github:", "gitlab:", "bitbucket:",
                                                   "gist:", "file:", "link:", "npm:", "workspace:",
                                                   "http:", "https:", "portal:", "patch:"};
  for (auto prefix : kPrefixes) {
    if (trimmed.starts_with(prefix)) {
      return true;
    }
  }
  if (trimmed.find("://") != std::string_view::npos || trimmed.find('/') != std::string_view::npos) {
    return true;
  }
  // A single bare word starting with a letter is a dist-tag.
  if (std::any_of(trimmed.begin(), trimmed.end(), is_space)) {
    return false;
  }
  const char c = trimmed.front();
  const bool alpha = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  if (!alpha) {
    return false;
  }
  if ((c == 'x' || c == 'X') && (trimmed.size() == 1 || trimmed[1] == '.')) {
    return false;
  }
  if ((c == 'v' || c == 'V') && trimmed.size() > 1 && is_digit(trimmed[1])) {
    return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) {
    s.remove_prefix(1);
  }
  while (!s.empty() && is_space(s.back())) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Identifier Identifier::from_number(std::uint64_t n) { return Identifier{true, n, std::to_string(n)}; }

Identifier Identifier::from_text(std::string s) { return Identifier{false, 0, std::move(s)}; }

std::string Identifier::to_string() const { return text; }

std::string Version::prerelease_text() const {
  std::string out;
  for (std::size_t i = 0; i < prerelease.size(); ++i) {
    if (i > 0) {
      out += '.';
    }
    out += prerelease[i].text;
  }
  return out;
}

std::string Version::to_string() const {
  std::string out = fmt::format("{}.{}.{}", major, minor, patch);
  if (!prerelease.empty()) {
    out += '-';
    out += prerelease_text();
  }
  if (!build.empty()) {
    out += '+';
    for (std::size_t i = 0; i < build.size(); ++i) {
      if (i > 0) {
        out += '.';
      }
      out += build[i];
    }
  }
  return out;
}

std::strong_ordering compare(const Version& a, const Version& b) {
  if (auto c = a.major <=> b.major; c != 0) return c;
  if (auto c = a.minor <=> b.minor; c != 0) return c;
  if (auto c = a.patch <=> b.patch; c != 0) return c;
  // A release ranks above every prerelease of the same triple.
  if (a.prerelease.empty() && b.prerelease.empty()) return std::strong_ordering::equal;
  if (a.prerelease.empty()) return std::strong_ordering::greater;
  if (b.prerelease.empty()) return std::strong_ordering::less;
  const std::size_t n = std::min(a.prerelease.size(), b.prerelease.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Identifier& x = a.prerelease[i];
    const Identifier& y = b.prerelease[i];
    if (x.numeric && y.numeric) {
      if (auto c = x.number <=> y.number; c != 0) return c;
    } else if (x.numeric != y.numeric) {
      return x.numeric ? std::strong_ordering::less : std::strong_ordering::greater;
    } else if (auto c = x.text.compare(y.text); c != 0) {
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return a.prerelease.size() <=> b.prerelease.size();
}

Version parse_version(std::string_view text) {
  if (text.empty()) {
    throw ParseError("empty version text", 0);
  }
  std::size_t pos = 0;
  if (text[0] == 'v' || text[0] == 'V') {
    pos = 1;
  }
  Version v;
  std::uint64_t* parts[] = {&v.major, &v.minor, &v.patch};
  for (int i = 0; i < 3; ++i) {
    if (i > 0) {
      if (pos >= text.size() || text[pos] != '.') {
        fail(text, pos, i == 1 ? "missing minor component" : "missing patch component");
      }
      ++pos;
    }
    *parts[i] = read_number(text, pos, 0);
  }
  if (pos < text.size() && text[pos] == '-') {
    ++pos;
    v.prerelease = to_prerelease(read_identifiers(text, pos, 0, true));
  }
  if (pos < text.size() && text[pos] == '+') {
    ++pos;
    v.build = read_identifiers(text, pos, 0, false);
  }
  if (pos != text.size()) {
    fail(text, pos, "unexpected character");
  }
  return v;
}

std::string_view op_symbol(Op op) {
  switch (op) {
    case Op::Less:
      return "<";
    case Op::LessEqual:
      return "<=";
    case Op::Greater:
      return ">";
    case Op::GreaterEqual:
      return ">=";
    case Op::Equal:
      return "=";
  }
  return "?";
}

bool Comparator::test(const Version& v) const {
  const auto c = compare(v, version);
  switch (op) {
    case Op::Less:
      return c < 0;
    case Op::LessEqual:
      return c <= 0;
    case Op::Greater:
      return c > 0;
    case Op::GreaterEqual:
      return c >= 0;
    case Op::Equal:
      return c == 0;
  }
  return false;
}

std::string Comparator::to_string() const {
  return std::string(op_symbol(op)) + version.to_string();
}

RangeExpr::RangeExpr(std::vector<ComparatorSet> alternatives)
    : alternatives_(std::move(alternatives)) {
  if (alternatives_.empty()) {
    throw ParseError("range has no alternatives", 0);
  }
  for (const auto& set : alternatives_) {
    if (set.empty()) {
      throw ParseError("range alternative has no comparators", 0);
    }
  }
}

std::string RangeExpr::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < alternatives_.size(); ++i) {
    if (i > 0) {
      out += " || ";
    }
    for (std::size_t j = 0; j < alternatives_[i].size(); ++j) {
      if (j > 0) {
        out += ' ';
      }
      out += alternatives_[i][j].to_string();
    }
  }
  return out;
}

RangeExpr parse_range(std::string_view text) {
  const std::string_view trimmed = trim(text);
  if (trimmed.empty()) {
    throw ParseError("empty range text", 0);
  }
  if (trimmed == "latest" || trimmed == "*") {
    return RangeExpr({match_all()});
  }
  if (looks_unsupported(trimmed)) {
    throw UnsupportedSpecError(fmt::format("unsupported dependency spec '{}'", text));
  }
  std::vector<ComparatorSet> alternatives;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = text.find("||", start);
    const std::size_t end = bar == std::string_view::npos ? text.size() : bar;
    alternatives.push_back(parse_alternative(text.substr(start, end - start), start, text));
    if (bar == std::string_view::npos) {
      break;
    }
    start = bar + 2;
  }
  return RangeExpr(std::move(alternatives));
}

bool satisfies(const Version& v, const RangeExpr& range) {
  for (const auto& set : range.alternatives()) {
    const bool all = std::all_of(set.begin(), set.end(), [&](const Comparator& c) { return c.test(v); });
    if (!all) {
      continue;
    }
    if (!v.is_prerelease()) {
      return true;
    }
    const bool gate = std::any_of(set.begin(), set.end(), [&](const Comparator& c) {
      return c.version.is_prerelease() && c.version.same_triple(v);
    });
    if (gate) {
      return true;
    }
  }
  return false;
}

}  // namespace tlev::semver
