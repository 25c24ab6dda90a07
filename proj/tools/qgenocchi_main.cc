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

// Command-line front end: evaluate single values or run the identity suite.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qgenocchi/bernstein.h"
#include "qgenocchi/config.h"
#include "qgenocchi/emit.h"
#include "qgenocchi/genocchi.h"
#include "qgenocchi/padic.h"
#include "qgenocchi/verify.h"

namespace {

constexpr int kUsageError = 64;

std::vector<int> ParseDegreeList(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw std::invalid_argument("empty degree list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted q-Genocchi numbers, q-Bernstein moments and "
               "fermionic p-adic q-integrals in exact arithmetic"};
  app.require_subcommand(1);

  // genocchi
  auto* gen = app.add_subcommand("genocchi", "g_n(x) with weight (alpha, beta)");
  int gen_n = 0;
  int64_t gen_x = 0;
  int gen_alpha = 1, gen_beta = 1;
  std::string gen_q;
  std::string gen_form = "closed";
  gen->add_option("--n", gen_n, "index n >= 0")->required();
  gen->add_option("--x", gen_x, "integer argument")->capture_default_str();
  gen->add_option("--alpha", gen_alpha)->capture_default_str();
  gen->add_option("--beta", gen_beta)->capture_default_str();
  gen->add_option("--q", gen_q, "rational q as a/b")->required();
  gen->add_option("--form", gen_form, "closed or umbral")
      ->check(CLI::IsMember({"closed", "umbral"}))
      ->capture_default_str();

  // bernstein
  auto* bern = app.add_subcommand("bernstein", "B_{k,n}^{(alpha)}(x, q)");
  int b_k = 0, b_n = 0, b_alpha = 1;
  int64_t b_x = 0;
  std::string b_q;
  bern->add_option("--k", b_k)->required();
  bern->add_option("--n", b_n)->required();
  bern->add_option("--alpha", b_alpha)->capture_default_str();
  bern->add_option("--x", b_x)->capture_default_str();
  bern->add_option("--q", b_q)->required();

  // integral
  auto* integ = app.add_subcommand(
      "integral", "truncated fermionic p-adic q-integral, levels 1..bigN");
  std::string i_kind;
  int64_t i_p = 3;
  int i_levels = 0;
  std::string i_q;
  int i_alpha = 1, i_beta = 1, i_n = 0, i_k = 0;
  int64_t i_x = 0;
  std::string i_degrees;
  integ->add_option("--kind", i_kind,
                    "constant_one, genocchi_kernel, reflected_kernel or "
                    "bernstein_product")
      ->required();
  integ->add_option("--p", i_p, "odd prime")->required();
  integ->add_option("--bigN", i_levels, "highest level N (default per p)");
  integ->add_option("--q", i_q, "integer q = 1 + p t")->required();
  integ->add_option("--alpha", i_alpha)->capture_default_str();
  integ->add_option("--beta", i_beta)->capture_default_str();
  integ->add_option("--n", i_n, "kernel power")->capture_default_str();
  integ->add_option("--x", i_x, "kernel shift")->capture_default_str();
  integ->add_option("--k", i_k, "Bernstein lower index")->capture_default_str();
  integ->add_option("--degrees", i_degrees, "comma-separated n_1,...,n_s");

  // verify
  auto* ver = app.add_subcommand("verify", "run the identity suite");
  std::string v_identity, v_variant, v_config, v_out;
  std::string v_format = "markdown";
  bool v_strict = false;
  bool v_serial = false;
  ver->add_option("--identity", v_identity, "run a single identity");
  ver->add_option("--variant", v_variant, "printed or corrected")
      ->check(CLI::IsMember({"printed", "corrected"}));
  ver->add_option("--config", v_config, "key=value grid file");
  ver->add_option("--format", v_format, "json, csv or markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown"}))
      ->capture_default_str();
  ver->add_option("--out", v_out, "output path (stdout when omitted)");
  ver->add_flag("--strict-printed", v_strict,
                "fail the run on printed-variant counterexamples too");
  ver->add_flag("--serial", v_serial, "use the single-threaded reference path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const qgen::Weights w = qgen::Weights::Make(gen_alpha, gen_beta);
      const qgen::QPoint q = qgen::QPoint::Parse(gen_q);
      const qgen::Rat value =
          gen_form == "umbral" ? qgen::GenocchiPolyUmbral(gen_n, gen_x, w, q)
                               : qgen::GenocchiPoly(gen_n, gen_x, w, q);
      std::cout << value << "\n";
      return 0;
    }
    if (*bern) {
      const qgen::QPoint q = qgen::QPoint::Parse(b_q);
      std::cout << qgen::BernsteinEval(b_k, b_n, b_alpha, b_x, q) << "\n";
      return 0;
    }
    if (*integ) {
      const qgen::Weights w = qgen::Weights::Make(i_alpha, i_beta);
      const qgen::PadicContext ctx(i_p, qgen::Rat::Parse(i_q), i_levels);
      qgen::IntegrandSpec f;
      switch (qgen::IntegrandSpec::ParseKind(i_kind)) {
        case qgen::IntegrandSpec::Kind::kConstantOne:
          f = qgen::IntegrandSpec::ConstantOne(w);
          break;
        case qgen::IntegrandSpec::Kind::kGenocchiKernel:
          f = qgen::IntegrandSpec::GenocchiKernel(i_n, i_x, w);
          break;
        case qgen::IntegrandSpec::Kind::kReflectedKernel:
          f = qgen::IntegrandSpec::ReflectedKernel(i_n, w);
          break;
        case qgen::IntegrandSpec::Kind::kBernsteinProduct:
          if (i_degrees.empty()) {
            throw std::invalid_argument("bernstein_product needs --degrees");
          }
          f = qgen::IntegrandSpec::BernsteinProduct(
              i_k, ParseDegreeList(i_degrees), w);
          break;
      }
      const qgen::Rat reference = f.ExactIntegral(ctx.q());
      const auto profile =
          qgen::ComputeConvergenceProfile(f, ctx, reference);
      std::cout << "integrand " << f.Describe() << "\n";
      std::cout << "exact " << reference << "\n";
      std::cout << "N\tv_p(error)\tpartial_sum\n";
      for (const auto& e : profile.entries) {
        std::cout << e.level << "\t" << e.error_valuation.ToString() << "\t"
                  << e.partial_sum << "\n";
      }
      return 0;
    }
    if (*ver) {
      const qgen::GridSpec grid = v_config.empty()
                                      ? qgen::GridSpec::Default()
                                      : qgen::LoadConfigFile(v_config);
      qgen::RunOptions options;
      if (!v_identity.empty()) {
        options.identity = qgen::ParseIdentity(v_identity);
      }
      if (!v_variant.empty()) {
        options.variant = v_variant == "printed" ? qgen::Variant::kPrinted
                                                 : qgen::Variant::kCorrected;
      }
      options.exec =
          v_serial ? qgen::Execution::kSerial : qgen::Execution::kParallel;
      const qgen::RunResult result = qgen::RunAll(grid, options);
      qgen::EmitReports(result, qgen::ParseReportFormat(v_format), v_out);
      return qgen::ExitStatus(result, v_strict);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return 0;
}
