#include "tropgeom/rational.hpp"

#include "tropgeom/error.hpp"

#include <cctype>

namespace tropgeom {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) fail(Errc::ParseError, "empty rational literal");

  Rat result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      fail(Errc::ParseError, "bad fraction literal: " + std::string(text));
    Int d{std::string(den)};
    if (d == 0) fail(Errc::ParseError, "zero denominator: " + std::string(text));
    result = Rat(Int{std::string(num)}, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || !all_digits(fp))
      fail(Errc::ParseError, "bad decimal literal: " + std::string(text));
    Int scale = 1;
    for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
    Int whole = ip.empty() ? Int{0} : Int{std::string(ip)};
    result = Rat(whole * scale + Int{std::string(fp)}, scale);
  } else {
    if (!all_digits(s))
      fail(Errc::ParseError, "bad integer literal: " + std::string(text));
    result = Rat(Int{std::string(s)});
  }
  return negative ? Rat(-result) : result;
}

std::string format_rational(const Rat& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string format_decimal_fixed(const Rat& value, unsigned places) {
  Int pow10 = 1;
  for (unsigned i = 0; i < places; ++i) pow10 *= 10;
  Int num = numerator(value) * pow10;
  Int den = denominator(value);  // > 0 by cpp_rational invariant

  // Floor division, then resolve the tie half-to-even.
  Int q = num / den;
  Int r = num - q * den;
  if (r < 0) {
    q -= 1;
    r += den;
  }
  Int twice = r * 2;
  if (twice > den || (twice == den && q % 2 != 0)) q += 1;

  bool neg = q < 0;
  Int mag = neg ? Int(-q) : q;
  Int ip = mag / pow10;
  Int fp = mag % pow10;
  std::string frac = fp.str();
  if (frac.size() < places) frac.insert(0, places - frac.size(), '0');
  std::string out = neg ? "-" : "";
  out += ip.str();
  if (places > 0) {
    out += '.';
    out += frac;
  }
  return out;
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotSquare: return "NotSquare";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::DegenerateLine: return "DegenerateLine";
    case Errc::IdenticalPoints: return "IdenticalPoints";
    case Errc::IdenticalLines: return "IdenticalLines";
    case Errc::NotIncident: return "NotIncident";
    case Errc::VertexPoint: return "VertexPoint";
    case Errc::Incompatible: return "Incompatible";
    case Errc::DegenerateConfiguration: return "DegenerateConfiguration";
    case Errc::CenterOnLine: return "CenterOnLine";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::NoSolution: return "NoSolution";
    case Errc::AmbiguousSolution: return "AmbiguousSolution";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::EmptyView: return "EmptyView";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace tropgeom
