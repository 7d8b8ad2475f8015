#include "limshape/rational.hpp"

#include "limshape/errors.hpp"

#include <cctype>

namespace limshape {

namespace {

bool all_digits(const std::string& s, std::size_t from) {
    if (from >= s.size()) return false;
    for (std::size_t i = from; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

bool valid_int(const std::string& s) {
    return all_digits(s, (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0);
}

std::int64_t mpz_to_i64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw ComputationError("integer overflow converting " + z.get_str());
    return z.get_si();
}

}  // namespace

Rational::Rational(long long v) {
    q_ = mpq_class(mpz_class(std::to_string(v)));
}

Rational::Rational(long num, long den) {
    if (den == 0) throw ValidationError("rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    std::string n = s.substr(0, slash);
    std::string d = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (n.size() > 1 && n[0] == '+') n = n.substr(1);
    if (!valid_int(n) || !all_digits(d, 0))
        throw ValidationError("not a rational: '" + s + "'");
    mpz_class den(d);
    if (den == 0) throw ValidationError("zero denominator in '" + s + "'");
    mpq_class q{mpz_class(n), den};
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (is_integer()) return num_str();
    return num_str() + "/" + den_str();
}

std::string Rational::decimal(int digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpq_class scaled = abs(q_) * scale;
    mpz_class n = scaled.get_num();
    mpz_class d = scaled.get_den();
    // round half up
    mpz_class r = (2 * n + d) / (2 * d);
    mpz_class ip = r / scale;
    mpz_class fp = r % scale;
    std::string out = (sgn(q_) < 0 && r != 0 ? "-" : "") + ip.get_str();
    if (fp != 0) {
        std::string f = fp.get_str();
        f = std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
        while (!f.empty() && f.back() == '0') f.pop_back();
        out += "." + f;
    }
    return out;
}

std::int64_t Rational::floor_int() const {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return mpz_to_i64(f);
}

std::int64_t Rational::ceil_int() const {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return mpz_to_i64(c);
}

std::int64_t Rational::to_int() const {
    if (!is_integer()) throw ComputationError("not an integer: " + str());
    return mpz_to_i64(q_.get_num());
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.sign() == 0) throw ComputationError("division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace limshape
