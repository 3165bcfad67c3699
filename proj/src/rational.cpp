#include "twr/rational.hpp"

#include <cctype>
#include <limits>

namespace twr {

Rat Rat::floor() const {
    require_finite("floor");
    BigInt n = numerator(v_);
    BigInt d = denominator(v_);  // always > 0 in canonical form
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return Rat(BigRat(q));
}

Rat Rat::ceil() const {
    require_finite("ceil");
    BigInt n = numerator(v_);
    BigInt d = denominator(v_);
    BigInt q = n / d;
    if (n > 0 && q * d != n) ++q;
    return Rat(BigRat(q));
}

long long Rat::floor_ll() const {
    BigInt q = numerator(floor().value());
    if (q < std::numeric_limits<long long>::min() || q > std::numeric_limits<long long>::max())
        throw std::domain_error("Rat: floor out of long long range");
    return q.convert_to<long long>();
}

double Rat::to_double() const {
    if (inf_) return std::numeric_limits<double>::infinity();
    return v_.convert_to<double>();
}

Rat Rat::parse(const std::string& text) {
    size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string s = text.substr(b, e - b);
    if (s.empty()) throw std::invalid_argument("Rat: empty number");

    if (s == "inf" || s == "infinity" || s == "+inf") return Rat::infinity();

    bool neg = false;
    size_t i = 0;
    if (s[i] == '+' || s[i] == '-') {
        neg = (s[i] == '-');
        ++i;
    }
    if (i == s.size()) throw std::invalid_argument("Rat: bad number '" + text + "'");

    auto digits = [&](size_t from, size_t to) -> BigInt {
        if (from == to) throw std::invalid_argument("Rat: bad number '" + text + "'");
        BigInt acc = 0;
        for (size_t k = from; k < to; ++k) {
            if (!std::isdigit(static_cast<unsigned char>(s[k])))
                throw std::invalid_argument("Rat: bad number '" + text + "'");
            acc = acc * 10 + (s[k] - '0');
        }
        return acc;
    };

    size_t slash = s.find('/', i);
    size_t dot = s.find('.', i);
    BigInt num, den;
    if (slash != std::string::npos) {
        if (dot != std::string::npos)
            throw std::invalid_argument("Rat: bad number '" + text + "'");
        num = digits(i, slash);
        den = digits(slash + 1, s.size());
        if (den.is_zero()) throw std::domain_error("Rat: zero denominator in '" + text + "'");
    } else if (dot != std::string::npos) {
        BigInt ip = digits(i, dot);
        size_t fdigits = s.size() - dot - 1;
        BigInt fp = digits(dot + 1, s.size());
        den = 1;
        for (size_t k = 0; k < fdigits; ++k) den *= 10;
        num = ip * den + fp;
    } else {
        num = digits(i, s.size());
        den = 1;
    }
    if (neg) num = -num;
    return Rat(BigRat(num, den));
}

std::string Rat::to_string() const {
    if (inf_) return "inf";
    BigInt n = numerator(v_);
    BigInt d = denominator(v_);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

}  // namespace twr
