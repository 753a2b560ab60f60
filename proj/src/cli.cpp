#include "qgt/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qgt/json_io.hpp"
#include "qgt/schur.hpp"
#include "qgt/interp.hpp"
#include "qgt/verify.hpp"

namespace qgt {

namespace {

Signature parse_signature(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> c;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw Error(ErrorKind::InvalidArgument, "not an integer: '" + tok + "'");
    c.push_back(v);
  }
  return Signature(std::move(c));
}

// Accepts repeated values and comma-separated lists.
std::vector<Rational> parse_rationals(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& item : items) {
    std::stringstream in(item);
    std::string tok;
    while (std::getline(in, tok, ','))
      if (!tok.empty()) out.push_back(parse_rational(tok));
  }
  return out;
}

Json pairs_json(const std::map<Signature, Rational>& m) {
  Json a = Json::array();
  for (const auto& [s, v] : m) a.push_back({{"signature", signature_json(s)}, {"value", scalar_json(v)}});
  return a;
}

struct Options {
  std::string q = "1/2";
  std::string out_path;
  bool json_errors = false;

  std::string sig;
  std::vector<std::string> at;
  std::string param = "q";
  int level = 1;
  std::string nu;
  std::string eps = "1/10000";
  int cap = -1;
  bool full_box = false;
  std::vector<std::string> H;
  int rows = 6, cols = 6, minors = 0;
  int N = 1, count = 1;
  std::uint64_t seed = 1;
  std::vector<std::string> mixture;
  std::string svg;
  int svg_index = 0;
  std::string suite = "all";
};

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out_path.empty()) {
    out << text << "\n";
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + o.out_path);
  f << text << "\n";
}

NuSeq parse_nu(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::InvalidArgument, "--nu is required");
  return NuSeq::parse(text);
}

Polynomial parse_H(const std::vector<std::string>& items) {
  auto c = parse_rationals(items);
  if (c.empty()) throw Error(ErrorKind::InvalidArgument, "--H needs at least one coefficient");
  return c;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations on the q-Gelfand-Tsetlin graph"};
  app.require_subcommand(1);
  app.add_flag("--json-errors", o.json_errors, "Report errors as JSON on stderr");
  app.add_option("--out", o.out_path, "Write the result to a file instead of stdout");

  auto with_q = [&](CLI::App* s) { s->add_option("--q", o.q, "Deformation parameter p/q in (0,1)"); };

  auto* dimq = app.add_subcommand("dimq", "q-weighted path count of a signature");
  dimq->add_option("lambda", o.sig, "Signature, e.g. \"2 0\"")->required();
  with_q(dimq);

  auto* schur = app.add_subcommand("schur", "Evaluate a Schur function");
  schur->add_option("lambda", o.sig)->required();
  schur->add_option("--at", o.at, "Point coordinates")->required()->allow_extra_args();

  auto* interp = app.add_subcommand("interp", "Evaluate a q-interpolation Schur polynomial");
  interp->add_option("mu", o.sig)->required();
  interp->add_option("--at", o.at)->required()->allow_extra_args();
  interp->add_option("--param", o.param, "q or qinv")->check(CLI::IsMember({"q", "qinv"}));
  with_q(interp);

  auto* cot = app.add_subcommand("cotransition", "Cotransition probabilities from a signature");
  cot->add_option("lambda", o.sig)->required();
  with_q(cot);

  auto* prim = app.add_subcommand("primitive", "Primitive coherent system projected to a level");
  prim->add_option("lambda", o.sig)->required();
  prim->add_option("--level", o.level)->required();
  with_q(prim);

  auto* ext = app.add_subcommand("extreme", "Projection of an extreme measure to a level");
  ext->add_option("--nu", o.nu, "Boundary parameter \"prefix;tail\"")->required();
  ext->add_option("--level", o.level)->required();
  ext->add_option("--eps", o.eps);
  ext->add_option("--cap", o.cap);
  ext->add_flag("--full-box", o.full_box);
  with_q(ext);

  auto* expand = app.add_subcommand("expand", "Coefficient table c_lambda of H(x_1)...H(x_N)");
  expand->add_option("--H", o.H, "Coefficients of H, constant term first")->required()->allow_extra_args();
  expand->add_option("--level", o.level)->required();
  with_q(expand);

  auto* qt = app.add_subcommand("qtoeplitz", "q-Toeplitz matrix built from H");
  auto* qt_nu = qt->add_option("--nu", o.nu);
  auto* qt_H = qt->add_option("--H", o.H)->allow_extra_args();
  qt_nu->excludes(qt_H);
  qt->add_option("--rows", o.rows);
  qt->add_option("--cols", o.cols);
  qt->add_option("--minors", o.minors, "Report initial minors up to this size");
  with_q(qt);

  auto* sample = app.add_subcommand("sample", "Exact samples of random paths and tilings");
  auto* s_nu = sample->add_option("--nu", o.nu);
  auto* s_mix = sample->add_option("--mixture", o.mixture, "Component \"prefix;tail@weight\", repeatable");
  s_nu->excludes(s_mix);
  sample->add_option("--N", o.N)->required();
  sample->add_option("--count", o.count);
  sample->add_option("--seed", o.seed);
  sample->add_option("--eps", o.eps);
  sample->add_option("--cap", o.cap);
  sample->add_option("--svg", o.svg, "Write an SVG picture of one tiling");
  sample->add_option("--svg-index", o.svg_index);
  with_q(sample);

  auto* verify = app.add_subcommand("verify", "Run the invariant battery");
  verify->add_option("--suite", o.suite);
  verify->add_option("--seed", o.seed);
  with_q(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const QParam q(parse_rational(o.q));
    ExtremeOptions opt{parse_rational(o.eps), o.cap, o.full_box};

    if (*dimq) {
      emit(o, out, to_string(dim_q(parse_signature(o.sig), q)));
    } else if (*schur) {
      auto x = parse_rationals(o.at);
      emit(o, out, to_string(schur_eval(parse_signature(o.sig), x)));
    } else if (*interp) {
      auto x = parse_rationals(o.at);
      Rational base = o.param == "q" ? q.value() : q.inverse();
      emit(o, out, to_string(interp_schur<Rational>(parse_signature(o.sig), x, base)));
    } else if (*cot) {
      std::map<Signature, Rational> row;
      for (auto& [mu, p] : cotransition_row(parse_signature(o.sig), q)) row[mu] = p;
      emit(o, out, pairs_json(row).dump(2));
    } else if (*prim) {
      emit(o, out, measure_json(primitive_system(parse_signature(o.sig), o.level, q)).dump(2));
    } else if (*ext) {
      emit(o, out, measure_json(extreme_projection(parse_nu(o.nu), o.level, q, opt)).dump(2));
    } else if (*expand) {
      Json j = {{"level", o.level}, {"coefficients", pairs_json(c_lambda_table(parse_H(o.H), o.level, q))}};
      emit(o, out, j.dump(2));
    } else if (*qt) {
      if (o.rows < 1 || o.cols < 1) throw Error(ErrorKind::IndexOutOfRange, "rows and cols must be positive");
      QToeplitz M = !o.nu.empty() ? d_nu(parse_nu(o.nu), o.rows, o.cols, q)
                                  : from_first_column(newton_expand_1d(parse_H(o.H), q), o.rows, o.cols, q);
      Json j = qtoeplitz_json(M);
      if (o.minors > 0) {
        if (o.minors > o.cols) throw Error(ErrorKind::IndexOutOfRange, "--minors exceeds --cols");
        Json list = Json::array();
        bool nonneg = true;
        for (int mask = 1; mask < (1 << o.rows); ++mask) {
          std::vector<int> idx;
          for (int b = 0; b < o.rows; ++b)
            if (mask & (1 << b)) idx.push_back(b + 1);
          if (static_cast<int>(idx.size()) > o.minors) continue;
          Rational v = initial_minor(M, idx);
          nonneg = nonneg && v >= 0;
          list.push_back({{"rows", idx}, {"value", scalar_json(v)}});
        }
        j["initial_minors"] = list;
        j["all_nonnegative"] = nonneg;
      }
      emit(o, out, j.dump(2));
    } else if (*sample) {
      SampleSpec spec = NuSeq({0}, 0);
      if (!o.mixture.empty()) {
        MixtureSpec mix;
        for (const auto& c : o.mixture) {
          auto at = c.find('@');
          if (at == std::string::npos) throw Error(ErrorKind::InvalidArgument, "mixture component needs '@weight'");
          mix.components.emplace_back(NuSeq::parse(c.substr(0, at)), parse_rational(c.substr(at + 1)));
        }
        spec = mix;
      } else {
        spec = parse_nu(o.nu);
      }
      if (o.count < 1) throw Error(ErrorKind::InvalidArgument, "--count must be positive");
      auto run = sample_tiling(spec, o.N, q, opt, o.count, o.seed);
      Json paths = Json::array(), tilings = Json::array();
      for (const auto& p : run.run.paths) paths.push_back(path_json(p));
      for (const auto& t : run.tilings) tilings.push_back(tiling_json(t));
      Json j = {{"manifest", manifest_json(run.run, o.count)}, {"paths", paths}, {"tilings", tilings}};
      j["manifest"]["q"] = scalar_json(q.value());
      if (!o.svg.empty()) {
        if (o.svg_index < 0 || o.svg_index >= o.count) throw Error(ErrorKind::IndexOutOfRange, "--svg-index");
        std::ofstream f(o.svg);
        if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + o.svg);
        f << tiling_svg(run.run.paths[o.svg_index]);
      }
      emit(o, out, j.dump(2));
    } else if (*verify) {
      VerifyConfig cfg{q, o.seed, 0};
      if (const char* b = std::getenv("QGT_VERIFY_BUDGET_MS")) cfg.budget_ms = std::atoll(b);
      std::ostringstream table;
      int code = run_verify(o.suite, cfg, table);
      emit(o, out, table.str());
      return code;
    }
  } catch (const Error& e) {
    if (o.json_errors)
      err << Json{{"error", kind_name(e.kind())}, {"message", e.what()}}.dump() << "\n";
    else
      err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    if (o.json_errors)
      err << Json{{"error", "InvalidInput"}, {"message", e.what()}}.dump() << "\n";
    else
      err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace qgt
