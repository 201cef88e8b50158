#include "tlev/timestamp.hpp"

#include <fmt/core.h>

#include "tlev/error.hpp"

namespace tlev {
namespace {

class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  int digits(std::size_t count) {
    int value = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9') {
        fail("expected digit");
      }
      value = value * 10 + (text_[pos_++] - '0');
    }
    return value;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(fmt::format("expected '{}'", c));
    }
    ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[nodiscard]] bool done() const { return pos_ == text_.size(); }
  [[nodiscard]] char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw DataError(fmt::format("invalid timestamp '{}': {} at offset {}", text_, what, pos_));
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Timestamp parse_timestamp(std::string_view text) {
  using namespace std::chrono;
  Cursor in(text);
  const int y = in.digits(4);
  in.expect('-');
  const int mo = in.digits(2);
  in.expect('-');
  const int d = in.digits(2);

  const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) {
    in.fail("calendar date out of range");
  }

  int hh = 0, mm = 0, ss = 0;
  int offset_minutes = 0;
  if (!in.done()) {
    if (!in.accept('T') && !in.accept(' ')) {
      in.fail("expected 'T'");
    }
    hh = in.digits(2);
    in.expect(':');
    mm = in.digits(2);
    if (in.accept(':')) {
      ss = in.digits(2);
      if (in.accept('.')) {
        if (in.peek() < '0' || in.peek() > '9') {
          in.fail("expected fraction digits");
        }
        while (in.peek() >= '0' && in.peek() <= '9') {
          in.digits(1);
        }
      }
    }
    if (hh > 23 || mm > 59 || ss > 60) {
      in.fail("time of day out of range");
    }
    if (!in.accept('Z')) {
      const char sign = in.peek();
      if (sign != '+' && sign != '-') {
        in.fail("expected zone designator");
      }
      in.accept(sign);
      const int oh = in.digits(2);
      in.accept(':');
      const int om = in.digits(2);
      offset_minutes = (sign == '-' ? -1 : 1) * (oh * 60 + om);
    }
  }
  if (!in.done()) {
    in.fail("trailing characters");
  }

  return sys_days{ymd} + hours{hh} + minutes{mm} + seconds{ss} - minutes{offset_minutes};
}

std::string format_timestamp(Timestamp t) {
  using namespace std::chrono;
  const auto day_point = floor<days>(t);
  const year_month_day ymd{day_point};
  const hh_mm_ss tod{t - day_point};
  return fmt::format("{:04}-{:02}-{:02}T{:02}:{:02}:{:02}Z", static_cast<int>(ymd.year()),
                     static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                     tod.hours().count(), tod.minutes().count(), tod.seconds().count());
}

double days_between(Timestamp earlier, Timestamp later) {
  return static_cast<double>((later - earlier).count()) / 86400.0;
}

}  // namespace tlev
