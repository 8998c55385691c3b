// lce_lab: command-line front end for the gallery, the reduction checkers,
// speed-up traces and the machine tools.
//
// Exit status: 0 = pass / evidence, 1 = violation / no evidence, 2 = usage,
// configuration or invariant error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "lcelab/lcelab.hpp"
#include "lcelab/registry.hpp"

namespace {

using lcelab::Rational;
using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kError = 2;

/// Writes to `path` via a temporary file and rename, or to stdout when empty.
void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw lcelab::ConfigError("cannot write '" + tmp + "'");
    out << text;
    if (!out.flush()) throw lcelab::ConfigError("write to '" + tmp + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw lcelab::ConfigError("cannot move report into '" + path + "': " + ec.message());
}

void emit_json(const json& j, const std::string& path) { emit(j.dump(2) + "\n", path); }

std::optional<Rational> optional_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return lcelab::parse_rational(text);
}

struct GalleryArgs {
  std::string config, out;
  std::uint64_t preview = 8;
};

int run_gallery(const GalleryArgs& a) {
  const auto reals = lcelab::build_gallery(lcelab::gallery_config_from_json(lcelab::registry::read_json_file(a.config)));
  json list = json::array();
  for (const auto& x : reals) {
    json approx = json::array(), gaps = json::array();
    for (std::uint64_t n = 0; n < a.preview; ++n) {
      approx.push_back(lcelab::io::to_json(x.approx_at(n)));
      gaps.push_back(lcelab::io::to_json(lcelab::gap(x, n)));
    }
    list.push_back({{"name", x.name()},
                    {"limit", lcelab::io::to_json(lcelab::Oracle::limit(x))},
                    {"approximations", std::move(approx)},
                    {"gaps", std::move(gaps)}});
  }
  emit_json({{"reals", std::move(list)}}, a.out);
  return kPass;
}

struct CheckWitnessArgs {
  std::string alpha, beta, witness, c, variant, sample_set = "default", out;
  std::uint64_t samples = 1000;
  std::uint64_t dyadic_bits = 12;
};

int run_check_witness(const CheckWitnessArgs& a) {
  const auto alpha = lcelab::registry::parse_real(a.alpha);
  const auto beta = lcelab::registry::parse_real(a.beta);
  auto w = lcelab::registry::parse_witness(a.witness, optional_rational(a.c));
  if (a.variant == "strict") w.variant = lcelab::Variant::strict;
  if (a.variant == "weakened") w.variant = lcelab::Variant::weakened;
  const auto samples = a.sample_set == "dyadic" ? lcelab::dyadic_samples(beta, a.dyadic_bits)
                                                : lcelab::default_samples(beta, a.samples);
  const auto report = lcelab::check_witness(alpha, beta, w, samples);
  json j = lcelab::io::to_json(report);
  j["alpha"] = alpha.name();
  j["beta"] = beta.name();
  j["constant"] = lcelab::io::to_json(w.constant);
  emit_json(j, a.out);
  return report.passed() ? kPass : kFail;
}

struct SpeedTraceArgs {
  std::string real, speedup, translation, rho = "1/2", format = "csv", out;
  std::uint64_t horizon = 10;
  std::uint64_t amplify = 1;
};

int run_speed_trace(const SpeedTraceArgs& a) {
  const auto x = lcelab::registry::parse_real(a.real);
  const Rational rho = lcelab::parse_rational(a.rho);
  if (a.speedup.empty() == a.translation.empty())
    throw lcelab::ConfigError("speed-trace needs exactly one of --speedup and --translation");
  if (!a.speedup.empty()) {
    const auto f = lcelab::registry::parse_speedup(a.speedup);
    lcelab::validate_speedup(f, a.horizon);
    const auto trace = lcelab::liminf_record(x, f, a.horizon);
    if (a.format == "csv") {
      emit(lcelab::io::to_csv(trace), a.out);
    } else {
      json j = lcelab::io::to_json(trace);
      j["real"] = x.name();
      j["speedup"] = f.name;
      j["rho"] = lcelab::io::to_json(rho);
      j["verdict"] = trace.evidence(rho) ? "evidence" : "no evidence";
      emit_json(j, a.out);
    }
    return trace.evidence(rho) ? kPass : kFail;
  }
  const auto g = lcelab::amplify(lcelab::registry::parse_translation(a.translation), a.amplify);
  const auto report =
      lcelab::check_total_speedup(x, g, rho, a.horizon, lcelab::default_probes(x, a.horizon));
  if (a.format == "csv") {
    emit(lcelab::io::to_csv(report.trace), a.out);
  } else {
    json j = lcelab::io::to_json(report);
    j["real"] = x.name();
    j["translation"] = g.name;
    emit_json(j, a.out);
  }
  return report.evidence() ? kPass : kFail;
}

struct ConvertArgs {
  std::string real, speedup, translation, out;
  std::uint64_t horizon = 10;
  std::uint64_t cap = 100000;
};

int run_convert(const ConvertArgs& a) {
  const auto x = lcelab::registry::parse_real(a.real);
  if (a.speedup.empty() == a.translation.empty())
    throw lcelab::ConfigError("convert needs exactly one of --speedup and --translation");
  json entries = json::array();
  if (!a.speedup.empty()) {
    const auto f = lcelab::registry::parse_speedup(a.speedup);
    lcelab::validate_speedup(f, a.horizon);
    const auto g = lcelab::translation_from_speedup(x, f);
    for (std::uint64_t i = 0; i <= a.horizon; ++i) {
      const Rational q = x.approx_at(i);
      entries.push_back({{"i", i}, {"q", lcelab::io::to_json(q)}, {"g_q", lcelab::io::to_json(g(q))}});
    }
    emit_json({{"direction", "speedup-to-translation"}, {"real", x.name()}, {"speedup", f.name}, {"entries", entries}},
              a.out);
    return kPass;
  }
  const auto g = lcelab::registry::parse_translation(a.translation);
  const auto f = lcelab::speedup_from_translation(x, g, a.cap);
  try {
    for (std::uint64_t i = 0; i <= a.horizon; ++i) entries.push_back({{"i", i}, {"f_i", f(i)}});
    lcelab::validate_speedup(f, a.horizon);
  } catch (const lcelab::SearchExhausted& e) {
    std::cerr << "lce_lab: " << e.what() << "\n";
    return kFail;
  }
  emit_json({{"direction", "translation-to-speedup"}, {"real", x.name()}, {"translation", g.name}, {"entries", entries}},
            a.out);
  return kPass;
}

struct CmmBuildArgs {
  std::string b, witness, c, overflow = "saturate", out;
};

int run_cmm_build(const CmmBuildArgs& a) {
  const auto b = lcelab::registry::read_machine(a.b);
  const Rational c = lcelab::parse_rational(a.c);
  const auto w = lcelab::registry::parse_witness(a.witness, c);
  const auto policy = a.overflow == "drop" ? lcelab::OverflowPolicy::drop : lcelab::OverflowPolicy::saturate;
  emit_json(lcelab::io::to_json(lcelab::uniformize(b, w, c, policy)), a.out);
  return kPass;
}

struct CmmCheckArgs {
  std::string a, b, alpha, beta, out;
  std::uint64_t c = 0;
  std::uint64_t n_max = 32;
};

int run_cmm_check(const CmmCheckArgs& args) {
  const auto a = lcelab::registry::read_machine(args.a);
  if (args.b.empty() || args.alpha.empty() || args.beta.empty())
    throw lcelab::ConfigError("cmm-check needs --B, --alpha and --beta");
  const auto b = lcelab::registry::read_machine(args.b);
  const auto alpha = lcelab::registry::parse_real(args.alpha);
  const auto beta = lcelab::registry::parse_real(args.beta);
  const auto report = lcelab::check_usch(a, b, alpha, beta, args.c, args.n_max);
  json j = lcelab::io::to_json(report);
  const Rational ma = lcelab::measure(a), mb = lcelab::measure(b);
  j["measure_A"] = lcelab::io::to_json(ma);
  j["measure_B"] = lcelab::io::to_json(mb);
  j["measure_equal"] = ma == mb;
  emit_json(j, args.out);
  return report.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic laboratory for left-c.e. reals"};
  app.require_subcommand(1);

  GalleryArgs gallery;
  auto* g = app.add_subcommand("gallery", "Build a gallery config and preview its reals");
  g->add_option("--config", gallery.config, "Gallery JSON")->required();
  g->add_option("--preview", gallery.preview, "Approximations to list per real");
  g->add_option("--out", gallery.out, "Output file (default stdout)");

  CheckWitnessArgs cw;
  auto* c = app.add_subcommand("check-witness", "Check a translation witness for alpha <= beta on samples");
  c->add_option("--alpha", cw.alpha)->required();
  c->add_option("--beta", cw.beta)->required();
  c->add_option("--witness", cw.witness)->required();
  c->add_option("--c", cw.c, "Constant as num/den");
  c->add_option("--samples", cw.samples, "Sample count for the default sample set");
  c->add_option("--sample-set", cw.sample_set)->check(CLI::IsMember({"default", "dyadic"}));
  c->add_option("--dyadic-bits", cw.dyadic_bits, "Maximum |q| for --sample-set dyadic");
  c->add_option("--variant", cw.variant)->check(CLI::IsMember({"strict", "weakened"}));
  c->add_option("--out", cw.out);

  SpeedTraceArgs st;
  auto* s = app.add_subcommand("speed-trace", "Ratio trace of a speed-up or total translation function");
  s->add_option("--real", st.real)->required();
  s->add_option("--speedup", st.speedup);
  s->add_option("--translation", st.translation);
  s->add_option("--amplify", st.amplify, "Compose the translation with itself k times");
  s->add_option("--horizon", st.horizon);
  s->add_option("--rho", st.rho);
  s->add_option("--format", st.format)->check(CLI::IsMember({"csv", "json"}));
  s->add_option("--out", st.out);

  ConvertArgs cv;
  auto* v = app.add_subcommand("convert", "Convert between speed-up and translation functions");
  v->add_option("--real", cv.real)->required();
  v->add_option("--speedup", cv.speedup);
  v->add_option("--translation", cv.translation);
  v->add_option("--horizon", cv.horizon);
  v->add_option("--cap", cv.cap, "Index search cap");
  v->add_option("--out", cv.out);

  CmmBuildArgs cb;
  auto* b = app.add_subcommand("cmm-build", "Build machine A from machine B and a total witness");
  b->add_option("--B", cb.b)->required();
  b->add_option("--witness", cb.witness)->required();
  b->add_option("--c", cb.c)->required();
  b->add_option("--overflow", cb.overflow)->check(CLI::IsMember({"saturate", "drop"}));
  b->add_option("--out", cb.out);

  CmmCheckArgs cc;
  auto* k = app.add_subcommand("cmm-check", "Check K_A(alpha|n) <= K_B(beta|n) + c");
  k->add_option("--A", cc.a)->required();
  k->add_option("--B", cc.b);
  k->add_option("--alpha", cc.alpha);
  k->add_option("--beta", cc.beta);
  k->add_option("--c", cc.c);
  k->add_option("--n-max", cc.n_max);
  k->add_option("--out", cc.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*g) return run_gallery(gallery);
    if (*c) return run_check_witness(cw);
    if (*s) return run_speed_trace(st);
    if (*v) return run_convert(cv);
    if (*b) return run_cmm_build(cb);
    if (*k) return run_cmm_check(cc);
  } catch (const std::exception& e) {
    std::cerr << "lce_lab: error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
