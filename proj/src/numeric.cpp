#include "latfree/numeric.hpp"

#include <algorithm>

namespace latfree {

unsigned long euler_phi(unsigned long n) {
    unsigned long r = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

int moebius(unsigned long n) {
    int r = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
    }
    if (n > 1) r = -r;
    return r;
}

std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> ds;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

static void factor_int_into(Int v, long sign, std::map<Int, long>& out) {
    if (v < 0) v = -v;
    if (v <= 1) return;
    const unsigned long bound = 1u << 20;
    for (unsigned long p = 2; Int(p) * Int(p) <= v && p <= bound; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
            out[Int(p)] += sign;
            mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
        }
    }
    if (v > 1) out[v] += sign;  // prime, or a composite beyond the trial bound
}

std::map<Int, long> factor_rational(const Rat& q) {
    if (q == 0) throw std::invalid_argument("factor_rational: zero");
    std::map<Int, long> out;
    factor_int_into(q.get_num(), +1, out);
    factor_int_into(q.get_den(), -1, out);
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

}  // namespace latfree
