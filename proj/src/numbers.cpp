#include "numbers.hpp"

namespace sto {

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rat_to_decimal(const Rat& r, int digits) {
    Int num = r.get_num();
    Int den = r.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    // round half away from zero at the last digit
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Int frac = (rem * scale * 2 + den) / (2 * den);
    if (frac >= scale) {
        q += 1;
        frac -= scale;
    }
    std::string fs = frac.get_str();
    std::string out = (neg ? "-" : "") + q.get_str();
    if (digits > 0) {
        out += ".";
        out += std::string(digits - (int)fs.size(), '0') + fs;
    }
    return out;
}

}  // namespace sto
