// Copyright 2026 The qgenocchi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgenocchi/padic.h"

#include <sstream>
#include <stdexcept>

#include "qgenocchi/genocchi.h"

namespace qgen {
namespace {

int64_t IntPow(int64_t base, int e) {
  int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// v_p of a nonzero integer.
int64_t IntegerValuation(const BigInt& value, const BigInt& p) {
  BigInt rest;
  return static_cast<int64_t>(
      mpz_remove(rest.get_mpz_t(), value.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace

std::string Valuation::ToString() const {
  return infinite_ ? "inf" : std::to_string(value_);
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) {
    return a.infinite_ == b.infinite_ ? std::strong_ordering::equal
           : a.infinite_              ? std::strong_ordering::greater
                                      : std::strong_ordering::less;
  }
  return a.value_ <=> b.value_;
}

bool IsPrime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Valuation PAdicValuation(const Rat& r, int64_t p) {
  if (!IsPrime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  if (r.IsZero()) return Valuation::Infinite();
  const BigInt prime = p;
  return Valuation::Finite(IntegerValuation(r.num(), prime) -
                           IntegerValuation(r.den(), prime));
}

PadicContext::PadicContext(int64_t p, const Rat& q, int levels)
    : p_(p), q_(q), levels_(levels > 0 ? levels : DefaultLevels(p)) {
  if (!IsPrime(p) || p == 2) {
    throw std::invalid_argument("p must be an odd prime, got " +
                                std::to_string(p));
  }
  if (!q.IsInteger() || BigInt(q.num() - 1) % p != 0) {
    throw GuardError("q = " + q.ToString() + " is not of the form 1 + " +
                     std::to_string(p) + "t, so |q - 1|_p < 1 fails");
  }
}

int PadicContext::DefaultLevels(int64_t p) {
  int levels = 0;
  int64_t power = 1;
  while (power * p <= 625) {
    power *= p;
    ++levels;
  }
  return levels < 2 ? 2 : levels;
}

IntegrandSpec IntegrandSpec::ConstantOne(Weights w) {
  IntegrandSpec f;
  f.kind = Kind::kConstantOne;
  f.w = w;
  return f;
}

IntegrandSpec IntegrandSpec::GenocchiKernel(int n, int64_t x, Weights w) {
  if (n < 0) throw std::invalid_argument("kernel power must be >= 0");
  IntegrandSpec f;
  f.kind = Kind::kGenocchiKernel;
  f.w = w;
  f.n = n;
  f.x = x;
  return f;
}

IntegrandSpec IntegrandSpec::ReflectedKernel(int n, Weights w) {
  if (n < 0) throw std::invalid_argument("kernel power must be >= 0");
  IntegrandSpec f;
  f.kind = Kind::kReflectedKernel;
  f.w = w;
  f.n = n;
  return f;
}

IntegrandSpec IntegrandSpec::BernsteinProduct(int k, std::vector<int> degrees,
                                              Weights w) {
  IntegrandSpec f;
  f.kind = Kind::kBernsteinProduct;
  f.w = w;
  f.k = k;
  f.degrees = std::move(degrees);
  BernsteinSpec{f.k, f.degrees, w.alpha}.Validate();
  return f;
}

const char* IntegrandSpec::KindName(Kind kind) {
  switch (kind) {
    case Kind::kConstantOne:
      return "constant_one";
    case Kind::kGenocchiKernel:
      return "genocchi_kernel";
    case Kind::kReflectedKernel:
      return "reflected_kernel";
    case Kind::kBernsteinProduct:
      return "bernstein_product";
  }
  return "?";
}

IntegrandSpec::Kind IntegrandSpec::ParseKind(const std::string& name) {
  for (Kind k : {Kind::kConstantOne, Kind::kGenocchiKernel,
                 Kind::kReflectedKernel, Kind::kBernsteinProduct}) {
    if (name == KindName(k)) return k;
  }
  throw std::invalid_argument("unknown integrand kind '" + name + "'");
}

Rat IntegrandSpec::Evaluate(int64_t xi, const QPoint& q) const {
  if (kind == Kind::kConstantOne) return Rat(1);
  const Rat sign = (xi % 2 == 0) ? Rat(1) : Rat(-1);
  return sign * q.value().Pow(-int64_t{w.beta} * xi) * Summand(xi, q);
}

Rat IntegrandSpec::Summand(int64_t xi, const QPoint& q) const {
  const Rat sign = (xi % 2 == 0) ? Rat(1) : Rat(-1);
  switch (kind) {
    case Kind::kConstantOne:
      return sign * q.value().Pow(int64_t{w.beta} * xi);
    case Kind::kGenocchiKernel:
      return sign * QBracket(x + xi, q.value().Pow(w.alpha)).Pow(n);
    case Kind::kReflectedKernel:
      return sign * QBracket(1 - xi, q.value().Pow(-w.alpha)).Pow(n);
    case Kind::kBernsteinProduct: {
      Rat prod = sign;
      for (int deg : degrees) prod *= BernsteinEval(k, deg, w.alpha, xi, q);
      return prod;
    }
  }
  return Rat(0);
}

Rat IntegrandSpec::ExactIntegral(const QPoint& q) const {
  switch (kind) {
    case Kind::kConstantOne:
      return Rat(1);
    case Kind::kGenocchiKernel:
      return GenocchiPoly(n + 1, x, w, q) / Rat(n + 1);
    case Kind::kReflectedKernel:
      return MomentIntegralExact(BernsteinSpec{0, {n}, w.alpha}, w.beta, q);
    case Kind::kBernsteinProduct:
      return MomentIntegralExact(BernsteinSpec{k, degrees, w.alpha}, w.beta, q);
  }
  return Rat(0);
}

std::string IntegrandSpec::Describe() const {
  std::ostringstream os;
  os << KindName(kind);
  switch (kind) {
    case Kind::kConstantOne:
      break;
    case Kind::kGenocchiKernel:
      os << "(n=" << n << " x=" << x << ")";
      break;
    case Kind::kReflectedKernel:
      os << "(n=" << n << ")";
      break;
    case Kind::kBernsteinProduct:
      os << "(" << BernsteinSpec{k, degrees, w.alpha}.Describe() << ")";
      break;
  }
  return os.str();
}

Rat AlternatingSum(const IntegrandSpec& f, const QPoint& q, int64_t begin,
                   int64_t end, Execution exec) {
  Rat total;
  if (exec == Execution::kSerial) {
    for (int64_t xi = begin; xi < end; ++xi) total += f.Summand(xi, q);
    return total;
  }
  // Exact addition is associative, so the reduction order does not matter.
#pragma omp parallel
  {
    Rat local;
#pragma omp for schedule(static) nowait
    for (int64_t xi = begin; xi < end; ++xi) local += f.Summand(xi, q);
#pragma omp critical(qgen_alternating_sum)
    total += local;
  }
  return total;
}

namespace {

Rat Normalizer(const IntegrandSpec& f, const PadicContext& ctx, int level) {
  // [p^N]_{-q^beta}
  return QBracket(IntPow(ctx.p(), level), -ctx.q().value().Pow(f.w.beta));
}

void CheckLevel(const PadicContext& ctx, int level) {
  if (level < 1 || level > ctx.levels()) {
    throw std::invalid_argument("level N=" + std::to_string(level) +
                                " outside 1.." + std::to_string(ctx.levels()));
  }
}

}  // namespace

Rat FermionicPartialSum(const IntegrandSpec& f, const PadicContext& ctx,
                        int level, Execution exec) {
  CheckLevel(ctx, level);
  return AlternatingSum(f, ctx.q(), 0, IntPow(ctx.p(), level), exec) /
         Normalizer(f, ctx, level);
}

bool ConvergenceProfile::NonDecreasing() const {
  for (size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].error_valuation < entries[i - 1].error_valuation) {
      return false;
    }
  }
  return true;
}

bool ConvergenceProfile::Converging() const {
  if (entries.empty()) return false;
  bool all_exact = true;
  for (const auto& e : entries) all_exact &= e.error_valuation.infinite();
  if (all_exact) return true;
  return NonDecreasing() &&
         entries.back().error_valuation > entries.front().error_valuation;
}

std::string ConvergenceProfile::ValuationTrace() const {
  std::string out;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ",";
    out += entries[i].error_valuation.ToString();
  }
  return out;
}

ConvergenceProfile ComputeConvergenceProfile(const IntegrandSpec& f,
                                             const PadicContext& ctx,
                                             const Rat& reference,
                                             Execution exec) {
  ConvergenceProfile profile;
  Rat running;
  int64_t done = 0;
  for (int level = 1; level <= ctx.levels(); ++level) {
    const int64_t end = IntPow(ctx.p(), level);
    running += AlternatingSum(f, ctx.q(), done, end, exec);
    done = end;
    ProfileEntry entry;
    entry.level = level;
    entry.partial_sum = running / Normalizer(f, ctx, level);
    entry.error_valuation =
        PAdicValuation(entry.partial_sum - reference, ctx.p());
    profile.entries.push_back(std::move(entry));
  }
  return profile;
}

}  // namespace qgen
