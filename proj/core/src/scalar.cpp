#include "camfan/scalar.hpp"

#include <cmath>
#include <cstdlib>

#include "camfan/errors.hpp"

namespace camfan {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonFiniteType: return "NonFiniteType";
    case Errc::UnsupportedBondLabel: return "UnsupportedBondLabel";
    case Errc::SingularForm: return "SingularForm";
    case Errc::NotSortable: return "NotSortable";
    case Errc::NotAntisortable: return "NotAntisortable";
    case Errc::IterationCapExceeded: return "IterationCapExceeded";
    case Errc::MaximalCliqueWrongSize: return "MaximalCliqueWrongSize";
    case Errc::NoPartner: return "NoPartner";
    case Errc::MultiplePartners: return "MultiplePartners";
    case Errc::NotBipartiteDiagram: return "NotBipartiteDiagram";
    case Errc::NotBipartiteWord: return "NotBipartiteWord";
    case Errc::NotInitial: return "NotInitial";
    case Errc::BadAscentSet: return "BadAscentSet";
    case Errc::NoJoinIrreducible: return "NoJoinIrreducible";
    case Errc::RaysDependent: return "RaysDependent";
    case Errc::GenericityFailure: return "GenericityFailure";
    case Errc::SpanViolation: return "SpanViolation";
    case Errc::MismatchWithNC: return "MismatchWithNC";
    case Errc::NonCrystallographic: return "NonCrystallographic";
    case Errc::NoRootOnLine: return "NoRootOnLine";
    case Errc::ParseError: return "ParseError";
    case Errc::UsageError: return "UsageError";
    case Errc::Internal: return "Internal";
  }
  return "UnknownError";
}

Scalar Scalar::rational(const mpq_class& num, const mpq_class& den) {
  if (den == 0) fail(Errc::ParseError, "zero denominator");
  Scalar s;
  s.a_ = num / den;
  s.a_.canonicalize();
  return s;
}

Scalar Scalar::quadratic(const mpq_class& a, const mpq_class& b, int d) {
  if (d <= 0) fail(Errc::ParseError, "radicand must be positive");
  Scalar s;
  s.a_ = a;
  s.b_ = b;
  s.d_ = d;
  s.a_.canonicalize();
  s.b_.canonicalize();
  s.normalize_();
  return s;
}

void Scalar::normalize_() {
  if (b_ == 0) d_ = 0;
}

bool Scalar::is_integer() const {
  return d_ == 0 && a_.get_den() == 1;
}

int Scalar::sign() const {
  int sa = sgn(a_);
  if (d_ == 0) return sa;
  int sb = sgn(b_);
  if (sa == 0) return sb;
  if (sb == 0) return sa;
  if (sa == sb) return sa;
  // Opposite signs: compare |a| against |b|*sqrt(d) via squares.
  mpq_class lhs = a_ * a_;
  mpq_class rhs = b_ * b_ * d_;
  int c = cmp(lhs, rhs);
  if (c == 0) fail(Errc::Internal, "sqrt(d) cannot be rational");
  return c > 0 ? sa : sb;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

namespace {
int join_radicand(int d1, int d2) {
  if (d1 == 0) return d2;
  if (d2 == 0) return d1;
  if (d1 != d2) fail(Errc::Internal, "mixed quadratic fields");
  return d1;
}
}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = join_radicand(d_, o.d_);
  a_ += o.a_;
  b_ += o.b_;
  normalize_();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = join_radicand(d_, o.d_);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize_();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  int d = join_radicand(d_, o.d_);
  mpq_class a = a_ * o.a_;
  if (d != 0) a += b_ * o.b_ * d;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  normalize_();
  return *this;
}

Scalar Scalar::inverse() const {
  if (d_ == 0) {
    if (a_ == 0) fail(Errc::Internal, "division by zero");
    Scalar r;
    r.a_ = 1 / a_;
    return r;
  }
  // 1/(a+b√d) = (a-b√d)/(a²-db²); the norm is nonzero since √d is irrational.
  mpq_class norm = a_ * a_ - b_ * b_ * d_;
  if (norm == 0) fail(Errc::Internal, "zero norm in quadratic field");
  Scalar r;
  r.a_ = a_ / norm;
  r.b_ = -b_ / norm;
  r.d_ = d_;
  r.normalize_();
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

namespace {

std::string rat_str(const mpq_class& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

// Parses "p" or "p/q" starting at pos; advances pos past the token.
mpq_class parse_rat(std::string_view text, size_t& pos) {
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = (text[pos] == '-');
    ++pos;
  }
  size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) fail(Errc::ParseError, "expected number in scalar: " + std::string(text));
  std::string num(text.substr(start, pos - start));
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    size_t dstart = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == dstart) fail(Errc::ParseError, "expected denominator in scalar: " + std::string(text));
    den = std::string(text.substr(dstart, pos - dstart));
  }
  mpz_class n_part(num), d_part(den);
  if (d_part == 0) fail(Errc::ParseError, "zero denominator in scalar: " + std::string(text));
  mpq_class q(n_part, d_part);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

// Accepts "√<digits>" (UTF-8) or "sqrt<digits>"; returns d, or 0 if not present.
int parse_radical(std::string_view text, size_t& pos) {
  static const std::string kRadical = "\xe2\x88\x9a";  // U+221A
  int matched = 0;
  if (text.substr(pos, kRadical.size()) == kRadical) {
    matched = static_cast<int>(kRadical.size());
  } else if (text.substr(pos, 4) == "sqrt") {
    matched = 4;
  } else {
    return 0;
  }
  pos += matched;
  size_t dstart = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == dstart) fail(Errc::ParseError, "expected radicand in scalar: " + std::string(text));
  return std::atoi(std::string(text.substr(dstart, pos - dstart)).c_str());
}

}  // namespace

std::string Scalar::str() const {
  if (d_ == 0) return rat_str(a_);
  std::string s = rat_str(a_);
  s += (sgn(b_) < 0) ? "-" : "+";
  s += rat_str(abs(b_));
  s += "\xe2\x88\x9a";
  s += std::to_string(d_);
  return s;
}

Scalar Scalar::parse(std::string_view text, int expected_d) {
  size_t pos = 0;
  mpq_class a = parse_rat(text, pos);
  if (pos == text.size()) return Scalar(a);
  // Optional "r/t√d" tail; the leading rational may itself carry the radical
  // ("3√5" without a separate rational part).
  mpq_class b;
  int d = parse_radical(text, pos);
  if (d != 0) {
    b = a;
    a = 0;
  } else {
    size_t mark = pos;
    b = parse_rat(text, pos);
    d = parse_radical(text, pos);
    if (d == 0) fail(Errc::ParseError, "expected radical in scalar: " + std::string(text) + " @" + std::to_string(mark));
  }
  if (pos != text.size()) fail(Errc::ParseError, "trailing characters in scalar: " + std::string(text));
  if (expected_d != 0 && d != expected_d)
    fail(Errc::ParseError, "scalar radicand mismatch in: " + std::string(text));
  if (expected_d == 0)
    fail(Errc::ParseError, "irrational scalar in rational context: " + std::string(text));
  return quadratic(a, b, d);
}

double Scalar::to_double() const {
  double x = a_.get_d();
  if (d_ != 0) x += b_.get_d() * std::sqrt(static_cast<double>(d_));
  return x;
}

}  // namespace camfan
