#include "minsum/scalar.hpp"

#include <cctype>
#include <limits>

#include "minsum/error.hpp"

namespace minsum {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidSpace: return "InvalidSpace";
    case ErrorCode::kInvalidPosition: return "InvalidPosition";
    case ErrorCode::kDegenerateSegment: return "DegenerateSegment";
    case ErrorCode::kDuplicatePosition: return "DuplicatePosition";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kCalledOnAsymmetric: return "CalledOnAsymmetric";
    case ErrorCode::kConfigSymmetric: return "ConfigSymmetric";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kUnsolvable: return "Unsolvable";
    case ErrorCode::kInvalidPolicy: return "InvalidPolicy";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kCollision: return "CollisionDetected";
  }
  return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw ParseError(0, "malformed rational '" + std::string(text) + "'");
}

}  // namespace

Scalar parse_scalar(std::string_view raw) {
  const std::string_view text = trim(raw);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Scalar out;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
    out = Scalar(mpz_class(std::string(num), 10), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad(text);
    }
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::string digits = std::string(whole.empty() ? "0" : whole) + std::string(frac);
    out = Scalar(mpz_class(digits, 10), den);
  } else {
    if (!all_digits(body)) bad(text);
    out = Scalar(mpz_class(std::string(body), 10));
  }
  out.canonicalize();
  return negative ? Scalar(-out) : out;
}

std::string to_string(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string join(const std::vector<Scalar>& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += to_string(values[i]);
  }
  return out;
}

std::vector<Scalar> parse_scalar_list(std::string_view text, char sep) {
  std::vector<Scalar> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    const auto item = text.substr(start, pos == std::string_view::npos ? pos : pos - start);
    out.push_back(parse_scalar(item));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Scalar floor(const Scalar& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Scalar(q);
}

std::int64_t ceil_to_int(const Scalar& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  if (!q.fits_slong_p()) throw Error(ErrorCode::kTooLarge, "ceil out of range: " + to_string(value));
  return q.get_si();
}

double to_double(const Scalar& value) { return value.get_d(); }

}  // namespace minsum
