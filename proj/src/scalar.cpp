#include "biplan/scalar.hpp"

#include <cctype>
#include <ostream>

#include "biplan/error.hpp"

namespace biplan {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
}

}  // namespace

Scalar::Scalar(std::int64_t v) : value_(mpz_class(static_cast<long>(v))) {}

Scalar::Scalar(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
}

Scalar::Scalar(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    const std::string_view num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text)) {
        throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
    }
    mpz_class num = parse_integer(num_text);
    mpz_class den = 1;
    if (slash != std::string_view::npos) {
        const std::string_view den_text = text.substr(slash + 1);
        if (!is_integer_literal(den_text)) {
            throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
        }
        den = parse_integer(den_text);
        if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    return Scalar(mpq_class(num, den));
}

std::string Scalar::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool Scalar::is_multiple_of(const Scalar& step) const {
    mpq_class q = value_ / step.value_;
    q.canonicalize();
    return q.get_den() == 1;
}

Scalar Scalar::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return Scalar(mpq_class(q));
}

Scalar Scalar::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return Scalar(mpq_class(q));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    value_ += o.value_;
    return *this;
}
Scalar& Scalar::operator-=(const Scalar& o) {
    value_ -= o.value_;
    return *this;
}
Scalar& Scalar::operator*=(const Scalar& o) {
    value_ *= o.value_;
    return *this;
}
Scalar& Scalar::operator/=(const Scalar& o) {
    if (sgn(o.value_) == 0) throw Error(ErrorCode::ParseError, "division by zero");
    value_ /= o.value_;
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.value_ = -value_;
    return r;
}

std::size_t Scalar::hash() const {
    const std::size_t h1 = std::hash<std::string>{}(value_.get_num().get_str(16));
    const std::size_t h2 = std::hash<std::string>{}(value_.get_den().get_str(16));
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

std::ostream& operator<<(std::ostream& os, const Scalar& v) { return os << v.str(); }

mpz_class common_denominator(const mpz_class& acc, const Scalar& v) {
    mpz_class out;
    mpz_lcm(out.get_mpz_t(), acc.get_mpz_t(), v.raw().get_den_mpz_t());
    return out;
}

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidWorkspace: return "InvalidWorkspace";
        case ErrorCode::StartOrGoalNotFree: return "StartOrGoalNotFree";
        case ErrorCode::StartOrGoalNotOnGrid: return "StartOrGoalNotOnGrid";
        case ErrorCode::PointNotFree: return "PointNotFree";
        case ErrorCode::DiscontinuousPlan: return "DiscontinuousPlan";
        case ErrorCode::InvalidPlan: return "InvalidPlan";
        case ErrorCode::SpacingViolation: return "SpacingViolation";
        case ErrorCode::CapacityExceeded: return "CapacityExceeded";
        case ErrorCode::GenerationExhausted: return "GenerationExhausted";
        case ErrorCode::GeometryConstraintViolated: return "GeometryConstraintViolated";
        case ErrorCode::InvalidPartition: return "InvalidPartition";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::NotOnLattice: return "NotOnLattice";
    }
    return "Unknown";
}

}  // namespace biplan
