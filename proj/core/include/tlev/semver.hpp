#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tlev::semver {

/// One dot-separated prerelease identifier. Numeric identifiers compare
/// numerically and always sort below alphanumeric ones.
struct Identifier {
  bool numeric = false;
  std::uint64_t number = 0;
  std::string text;

  static Identifier from_number(std::uint64_t n);
  static Identifier from_text(std::string s);

  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const Identifier&, const Identifier&) = default;
};

/// A SemVer 2.0.0 version. Build metadata is kept for round-tripping but
/// never takes part in precedence.
struct Version {
  std::uint64_t major = 0;
  std::uint64_t minor = 0;
  std::uint64_t patch = 0;
  std::vector<Identifier> prerelease;
  std::vector<std::string> build;

  [[nodiscard]] bool is_prerelease() const noexcept { return !prerelease.empty(); }
  [[nodiscard]] bool same_triple(const Version& other) const noexcept {
    return major == other.major && minor == other.minor && patch == other.patch;
  }

  /// Prerelease identifiers joined by '.', empty when there are none.
  [[nodiscard]] std::string prerelease_text() const;
  [[nodiscard]] std::string to_string() const;

  /// Structural equality, including build metadata. Use compare() for
  /// precedence equality.
  friend bool operator==(const Version&, const Version&) = default;
};

/// Precedence order; build metadata ignored.
std::strong_ordering compare(const Version& a, const Version& b);

struct PrecedenceLess {
  bool operator()(const Version& a, const Version& b) const { return compare(a, b) < 0; }
};

/// Parses strict SemVer text, tolerating one leading 'v'. Throws ParseError.
Version parse_version(std::string_view text);

enum class Op { Less, LessEqual, Greater, GreaterEqual, Equal };

std::string_view op_symbol(Op op);

struct Comparator {
  Op op = Op::GreaterEqual;
  Version version;

  [[nodiscard]] bool test(const Version& v) const;
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const Comparator&, const Comparator&) = default;
};

/// Comparators that must all hold.
using ComparatorSet = std::vector<Comparator>;

/// Disjunction of comparator sets. Always holds at least one set: the
/// parser rejects input that would produce none, and match-all is the
/// single set `>=0.0.0`.
class RangeExpr {
public:
  explicit RangeExpr(std::vector<ComparatorSet> alternatives);

  [[nodiscard]] const std::vector<ComparatorSet>& alternatives() const noexcept {
    return alternatives_;
  }

  /// Canonical text: comparators separated by one space, sets by " || ".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const RangeExpr&, const RangeExpr&) = default;

private:
  std::vector<ComparatorSet> alternatives_;
};

/// Parses npm-style range text. Caret, tilde, x-range and hyphen forms are
/// desugared into plain comparators; "*", "x", "" (inside an OR) and
/// "latest" match everything. Throws ParseError for malformed text and
/// UnsupportedSpecError for URLs, paths, aliases and other dist-tags.
RangeExpr parse_range(std::string_view text);

/// True iff some alternative holds entirely. A prerelease version only
/// matches an alternative that names a prerelease on the same
/// major.minor.patch triple.
bool satisfies(const Version& v, const RangeExpr& range);

}  // namespace tlev::semver
