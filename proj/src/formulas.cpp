#include "vantage/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace vantage {

namespace {

constexpr int kStirlingCap = 160;
constexpr int kFibonacciCap = 400;

struct Tables {
  std::vector<std::vector<BigInt>> stirling;
  std::vector<BigInt> fib;

  Tables() {
    stirling.assign(kStirlingCap + 1, {});
    stirling[0] = {BigInt(1)};
    for (int n = 1; n <= kStirlingCap; ++n) {
      stirling[n].assign(n + 1, BigInt(0));
      for (int k = 1; k <= n; ++k) {
        const BigInt left = k - 1 < static_cast<int>(stirling[n - 1].size()) ? stirling[n - 1][k - 1] : BigInt(0);
        const BigInt down = k < static_cast<int>(stirling[n - 1].size()) ? stirling[n - 1][k] : BigInt(0);
        stirling[n][k] = left + BigInt(n - 1) * down;
      }
    }
    fib.assign(kFibonacciCap + 1, BigInt(0));
    fib[1] = 1;
    fib[2] = 1;
    for (int k = 3; k <= kFibonacciCap; ++k) fib[k] = fib[k - 1] + fib[k - 2];
  }
};

// Built once on first use, read-only afterwards.
const Tables& tables() {
  static const Tables t;
  return t;
}

BigInt poly(std::initializer_list<std::pair<long, int>> terms, const BigInt& x) {
  BigInt out = 0;
  for (const auto& [coef, power] : terms) {
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(power));
    out += coef * p;
  }
  return out;
}

BigInt pw(long base, unsigned long e) {
  BigInt out;
  const BigInt b = base;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

BigInt exact_div(const BigInt& num, long den) {
  BigInt q, r;
  const BigInt d = den;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
  if (r != 0) throw std::logic_error("inexact division in closed-form count");
  return q;
}

BigInt stirling1(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n <= kStirlingCap) return tables().stirling[n][k];
  std::vector<BigInt> row = tables().stirling[kStirlingCap];
  for (int m = kStirlingCap + 1; m <= n; ++m) {
    std::vector<BigInt> next(m + 1, BigInt(0));
    for (int j = 1; j <= m; ++j) {
      next[j] = row[j - 1] + BigInt(m - 1) * (j < static_cast<int>(row.size()) ? row[j] : BigInt(0));
    }
    row = std::move(next);
  }
  return row[k];
}

BigInt fibonacci(int k) {
  require(k >= 0, "fibonacci index must be non-negative");
  if (k <= kFibonacciCap) return tables().fib[k];
  BigInt a = tables().fib[kFibonacciCap - 1];
  BigInt b = tables().fib[kFibonacciCap];
  for (int i = kFibonacciCap + 1; i <= k; ++i) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(int n) {
  require(n >= 0, "factorial of a negative number");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt max_orderings(int n, int d) {
  require(n >= 1 && d >= 0, "max_orderings needs n >= 1, d >= 0");
  BigInt out = 0;
  for (int i = 0; i <= d && i <= n - 1; ++i) out += stirling1(n, n - i);
  return out;
}

BigInt min_orderings(int n) {
  require(n >= 2, "min_orderings needs n >= 2");
  return 2 * n - 2;
}

BigInt max_orderings_plane_poly(int n) {
  return exact_div(poly({{3, 4}, {-10, 3}, {21, 2}, {-14, 1}, {24, 0}}, n), 24);
}

BigInt max_orderings_line_poly(int n) { return exact_div(poly({{1, 2}, {-1, 1}, {2, 0}}, n), 2); }

BigInt max_orderings_space_poly(int n) {
  return exact_div(poly({{1, 6}, {-7, 5}, {23, 4}, {-37, 3}, {48, 2}, {-28, 1}, {48, 0}}, n), 48);
}

BigInt free_sum_increment(long s, long t) {
  require(s >= 1 && t >= 1, "free_sum_increment needs s, t >= 1");
  const BigInt S = s;
  const BigInt T = t;
  const BigInt num = 3 * S * S * T * T + 2 * S * S * S * T - 5 * S * S * T + 2 * S * T * T * T - 5 * S * T * T +
                     7 * S * T - 4;
  return exact_div(num, 4);
}

BigInt trapezoid_count(int k) {
  require(k >= 1, "trapezoid_count needs k >= 1");
  return max_orderings(2 * k, 2) - k + 1;
}

BigInt parallel_gadget_poly(long m, long k, long l) {
  require(m >= 0 && k >= 2 && l >= 1, "parallel gadget needs m >= 0, k >= 2, l >= 1");
  const BigInt K = k, L = l, M = m;
  const BigInt kl = K * L;
  BigInt num = 18 * kl * kl * M * M + 12 * kl * kl * kl * M - 30 * kl * kl * M + 3 * kl * kl * kl * kl -
               10 * kl * kl * kl + 21 * kl * kl - 3 * K * K * K * K * L + 10 * K * K * K * L - 9 * K * K * L +
               12 * kl * M * M * M - 30 * kl * M * M + 42 * kl * M - 12 * kl + 3 * M * M * M * M - 10 * M * M * M +
               21 * M * M - 14 * M + 24;
  return exact_div(num, 24);
}

BigInt parallel_gadget_deficit_form(long m, long k, long l) {
  require(m >= 0 && k >= 2 && l >= 1, "parallel gadget needs m >= 0, k >= 2, l >= 1");
  return max_orderings(static_cast<int>(m + k * l), 2) - BigInt(l) * stirling1(static_cast<int>(k), static_cast<int>(k - 2));
}

BigInt parallel_gadget_k_form(long m, long k, long l) {
  require(m >= 0 && k >= 2 && l >= 1, "parallel gadget needs m >= 0, k >= 2, l >= 1");
  return max_orderings(static_cast<int>(m + k * l), 2) - BigInt(k) * stirling1(static_cast<int>(k), static_cast<int>(k - 2));
}

BigInt circle_gadget_count(int n, int k) {
  require(2 <= k && k <= n, "circle gadget needs 2 <= k <= n");
  return max_orderings(n, 2) - max_orderings(k, 2) + BigInt(k) * (k - 1);
}

BigInt circle_gadget_poly(int n, int k) {
  require(2 <= k && k <= n, "circle gadget needs 2 <= k <= n");
  const BigInt num =
      poly({{3, 4}, {-10, 3}, {21, 2}, {-14, 1}}, n) - poly({{3, 4}, {-10, 3}, {-3, 2}, {10, 1}}, k);
  return exact_div(num, 24);
}

BigInt sphere_max(int n) {
  require(n >= 1, "sphere_max needs n >= 1");
  return exact_div(poly({{3, 4}, {-10, 3}, {9, 2}, {-2, 1}, {24, 0}}, n), 12);
}

BigInt sphere_min(int n) {
  require(n >= 1, "sphere_min needs n >= 1");
  if (n == 1) return 1;
  if (n == 2) return 2;
  if (n == 3) return 6;
  return 2 * n;
}

BigInt sphere_doubled_count(int n) {
  require(n >= 1, "sphere_doubled_count needs n >= 1");
  return exact_div(poly({{3, 4}, {-4, 3}, {1, 1}, {6, 0}}, n), 3);
}

DoubledCensus doubled_census(int n) {
  return DoubledCensus{24 * binomial(n, 4) + 12 * binomial(n, 3), 8 * binomial(n, 3), 2 * binomial(n, 2)};
}

BigInt line_regions(const BigInt& k) {
  require(k >= 0, "line_regions needs k >= 0");
  BigInt num = k * k + k + 2;
  BigInt q, r;
  mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), 2);
  if (r != 0) throw std::logic_error("inexact division in closed-form count");
  return q;
}

double ratio_to_free(int n) {
  const mpq_class ratio(max_orderings(n, 2), line_regions(binomial(n, 2)));
  return ratio.get_d();
}

BigInt velo_bound(int n) {
  require(n >= 1, "velo_bound needs n >= 1");
  return 2 * (fibonacci(n + 2) - n);
}

BigInt two_vantage_line_bound(int n) {
  require(n >= 1, "bound needs n >= 1");
  return pw(2, static_cast<unsigned long>(n - 1));
}

const std::vector<FormulaInfo>& formula_catalog() {
  static const std::vector<FormulaInfo> catalog = {
      {"max", 2, "max N D          maximum orderings of N points in dimension D"},
      {"max-poly", 1, "max-poly N       planar maximum from the quartic closed form"},
      {"min", 1, "min N            minimum orderings (any dimension)"},
      {"free-sum", 2, "free-sum S T     regions gained by a free merge of sizes S and T"},
      {"trapezoid", 1, "trapezoid K      generalized trapezoid on 2K points"},
      {"parallel-poly", 3, "parallel-poly M K L     parallel-lines gadget, polynomial form"},
      {"parallel-deficit", 3, "parallel-deficit M K L  M(n) - L*s(K,K-2)"},
      {"parallel-k-form", 3, "parallel-k-form M K L   M(n) - K*s(K,K-2)"},
      {"circle", 2, "circle N K       K concyclic points plus N-K free points"},
      {"sphere-max", 1, "sphere-max N     maximum on the sphere"},
      {"sphere-min", 1, "sphere-min N     minimum on the sphere"},
      {"doubled", 1, "doubled N        free hemisphere set with antipodes (2N points)"},
      {"line-regions", 1, "line-regions K   regions of K generic lines"},
      {"velo-bound", 1, "velo-bound N     2(F_{N+2} - N)"},
      {"stirling", 2, "stirling N K     unsigned Stirling number of the first kind"},
      {"fibonacci", 1, "fibonacci K      F_K with F_1 = F_2 = 1"},
      {"binomial", 2, "binomial N K"},
  };
  return catalog;
}

BigInt formula_by_name(const std::string& name, const std::vector<long>& args) {
  const auto& catalog = formula_catalog();
  const auto it = std::find_if(catalog.begin(), catalog.end(), [&](const auto& f) { return f.name == name; });
  if (it == catalog.end()) throw std::invalid_argument("unknown formula '" + name + "'");
  if (static_cast<int>(args.size()) != it->arity) {
    throw std::invalid_argument("formula '" + name + "' takes " + std::to_string(it->arity) + " argument(s)");
  }
  auto i = [&](std::size_t k) { return static_cast<int>(args[k]); };
  if (name == "max") return max_orderings(i(0), i(1));
  if (name == "max-poly") return max_orderings_plane_poly(i(0));
  if (name == "min") return min_orderings(i(0));
  if (name == "free-sum") return free_sum_increment(args[0], args[1]);
  if (name == "trapezoid") return trapezoid_count(i(0));
  if (name == "parallel-poly") return parallel_gadget_poly(args[0], args[1], args[2]);
  if (name == "parallel-deficit") return parallel_gadget_deficit_form(args[0], args[1], args[2]);
  if (name == "parallel-k-form") return parallel_gadget_k_form(args[0], args[1], args[2]);
  if (name == "circle") return circle_gadget_count(i(0), i(1));
  if (name == "sphere-max") return sphere_max(i(0));
  if (name == "sphere-min") return sphere_min(i(0));
  if (name == "doubled") return sphere_doubled_count(i(0));
  if (name == "line-regions") return line_regions(args[0]);
  if (name == "velo-bound") return velo_bound(i(0));
  if (name == "stirling") return stirling1(i(0), i(1));
  if (name == "fibonacci") return fibonacci(i(0));
  return binomial(args[0], args[1]);
}

}  // namespace vantage
