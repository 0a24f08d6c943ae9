#include "ugig/rational.hpp"

#include <cctype>
#include <ostream>

#include "ugig/error.hpp"

namespace ugig {

const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedInput: return "malformed input";
    case ErrorCode::MalformedBytes: return "malformed bytes";
    case ErrorCode::DuplicateLabel: return "duplicate label";
    case ErrorCode::UnknownVertex: return "unknown vertex";
    case ErrorCode::EdgeWithinPartition: return "edge within partition";
    case ErrorCode::BadParams: return "bad parameters";
    case ErrorCode::CollinearOverlap: return "collinear overlap";
    case ErrorCode::EmptyRepresentation: return "empty representation";
    case ErrorCode::ZeroLength: return "zero length";
    case ErrorCode::OddCycle: return "odd cycle";
    case ErrorCode::NotATree: return "not a tree";
    case ErrorCode::NotProper: return "not proper";
    case ErrorCode::InconsistentCertificate: return "inconsistent certificate";
    case ErrorCode::PopulationMismatch: return "population mismatch";
    case ErrorCode::InconsistentEvents: return "inconsistent events";
    case ErrorCode::BudgetExceeded: return "budget exceeded";
    case ErrorCode::CapExceeded: return "cap exceeded";
    case ErrorCode::InconsistentModel: return "inconsistent model";
    case ErrorCode::SolverFailed: return "solver failed";
    case ErrorCode::NotAnEdge: return "not an edge";
    case ErrorCode::NeighborhoodOverlap: return "neighborhood overlap";
    case ErrorCode::BadEpsilon: return "bad epsilon";
    case ErrorCode::BlockedSlide: return "blocked slide";
    case ErrorCode::NotTwoDirectional: return "not two-directional";
    case ErrorCode::NotUGIG: return "not a unit grid intersection graph";
    case ErrorCode::SquareTooSmall: return "square too small";
    case ErrorCode::InvalidInstance: return "invalid instance";
    case ErrorCode::NotPlanar: return "not planar";
    case ErrorCode::NotThreeConnected: return "not three-connected";
    case ErrorCode::BadGirth: return "bad girth";
    case ErrorCode::AlreadyFourOccurrences: return "already four occurrences";
  }
  return "unknown error";
}

Rat::Rat(long n, long d) {
  if (d == 0) fail(ErrorCode::BadParams, "zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat Rat::operator/(const Rat& o) const {
  if (o.v_ == 0) fail(ErrorCode::BadParams, "division by zero");
  return Rat(mpq_class(v_ / o.v_));
}

Rat Rat::parse(const std::string& text) {
  if (text.empty()) fail(ErrorCode::MalformedInput, "empty rational");
  // Accept [-]digits[/digits].  mpq_class's own parser accepts more (spaces,
  // base prefixes), so validate first.
  size_t i = 0;
  auto digits = [&](size_t from) {
    size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) j++;
    return j;
  };
  if (text[i] == '-' || text[i] == '+') i++;
  size_t e = digits(i);
  if (e == i) fail(ErrorCode::MalformedInput, "bad rational '" + text + "'");
  if (e != text.size()) {
    if (text[e] != '/') fail(ErrorCode::MalformedInput, "bad rational '" + text + "'");
    size_t e2 = digits(e + 1);
    if (e2 == e + 1 || e2 != text.size())
      fail(ErrorCode::MalformedInput, "bad rational '" + text + "'");
  }
  mpq_class v;
  if (v.set_str(text, 10) != 0) fail(ErrorCode::MalformedInput, "bad rational '" + text + "'");
  if (v.get_den() == 0) fail(ErrorCode::MalformedInput, "zero denominator in '" + text + "'");
  v.canonicalize();
  return Rat(v);
}

Rat Rat::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return Rat(mpq_class(q));
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace ugig
