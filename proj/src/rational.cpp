#include "ohw/rational.hpp"

namespace ohw {

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    size_t slash = s.find('/');
    try {
        mpq_class q;
        if (slash == std::string::npos) {
            q = mpq_class(mpz_class(s));
        } else {
            mpz_class num(s.substr(0, slash));
            mpz_class den(s.substr(slash + 1));
            if (den == 0) throw ParseError("rational with zero denominator: " + s);
            q = mpq_class(num, den);
        }
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational literal: " + s);
    }
}

std::string rational_to_string(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool rational_sqrt(const mpq_class& q, mpq_class& root) {
    if (q < 0) return false;
    if (q == 0) {
        root = 0;
        return true;
    }
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(q.get_den().get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), q.get_den().get_mpz_t());
    root = mpq_class(rn, rd);
    root.canonicalize();
    return true;
}

}  // namespace ohw
