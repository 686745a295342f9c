#include "charlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "charlab/demazure.hpp"
#include "charlab/errors.hpp"
#include "charlab/macdonald.hpp"
#include "charlab/special_current.hpp"
#include "charlab/verify.hpp"
#include "charlab/weyl.hpp"

namespace charlab {

std::vector<long> parse_weight_labels(const std::string& s, int rank) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty label in weight list");
    size_t pos = 0;
    long v = std::stol(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad label: " + item);
    out.push_back(v);
  }
  if (static_cast<int>(out.size()) != rank)
    throw std::invalid_argument("expected " + std::to_string(rank) + " weight labels");
  return out;
}

std::string format_weight_labels(const std::vector<long>& labels) {
  std::ostringstream os;
  for (size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
  return os.str();
}

namespace {

std::vector<long> parse_labels(const std::string& s, int rank) { return parse_weight_labels(s, rank); }

int default_qtrunc() {
  if (const char* env = std::getenv("CHARLAB_QTRUNC")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 8;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + out_path);
    os << text << "\n";
  }
}

CharSeries load_character(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open character file: " + path);
  std::stringstream buf;
  buf << is.rdbuf();
  return CharSeries::from_json(buf.str());
}

int report_results(const std::vector<CheckResult>& results) {
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "\n";
    if (!r.pass) {
      ok = false;
      if (!r.detail.empty()) std::cerr << "  " << r.detail << "\n";
    }
  }
  return ok ? 0 : 1;
}

struct Options {
  int rank = 0;
  std::string weight;
  int qtrunc = default_qtrunc();
  std::string out;
  std::string left, right;
  int max_weight = -1;
};

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"graded characters for the twisted current algebra laboratory"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool need_weight, bool need_qtrunc) {
    cmd->add_option("--rank", opt.rank, "rank l >= 1")->required();
    auto* w = cmd->add_option("--weight", opt.weight, "fundamental-weight labels m1,..,mL");
    if (need_weight) w->required();
    if (need_qtrunc) cmd->add_option("--qtrunc", opt.qtrunc, "q-window in whole q-units");
    cmd->add_option("--out", opt.out, "write data to a file instead of stdout");
  };

  auto* cchar = app.add_subcommand("char", "graded characters as JSON");
  std::vector<CLI::App*> char_kinds;
  for (const char* kind : {"thin", "local-weyl", "slice", "global-weyl", "vacuum"}) {
    auto* sub = cchar->add_subcommand(kind);
    add_common(sub, std::string(kind) != "vacuum", true);
    char_kinds.push_back(sub);
  }
  cchar->require_subcommand(1);

  auto* cpoly = app.add_subcommand("poly", "specialized polynomials as JSON");
  for (const char* kind : {"ebar", "edag"}) {
    auto* sub = cpoly->add_subcommand(kind);
    add_common(sub, true, true);
  }
  cpoly->require_subcommand(1);

  auto* cpair = app.add_subcommand("pair", "constant-term pairings of character files");
  for (const char* kind : {"ext", "sym"}) {
    auto* sub = cpair->add_subcommand(kind);
    sub->add_option("--rank", opt.rank, "rank l >= 1")->required();
    sub->add_option("--left", opt.left, "left character JSON file")->required();
    sub->add_option("--right", opt.right, "right character JSON file")->required();
    sub->add_option("--qtrunc", opt.qtrunc, "q-window in whole q-units");
    sub->add_option("--out", opt.out, "write data to a file instead of stdout");
  }
  cpair->require_subcommand(1);

  auto* cdim = app.add_subcommand("dim", "dimension formulas");
  auto* cdim_special = cdim->add_subcommand("special", "local Weyl module dimension");
  cdim_special->add_option("--rank", opt.rank)->required();
  cdim_special->add_option("--weight", opt.weight)->required();
  cdim->require_subcommand(1);

  auto* crep = app.add_subcommand("report", "derived reports as JSON");
  auto* crep_al = crep->add_subcommand("a-lambda", "generator multiset, rank and Hilbert series");
  crep_al->add_option("--rank", opt.rank)->required();
  crep_al->add_option("--weight", opt.weight)->required();
  crep_al->add_option("--qtrunc", opt.qtrunc);
  crep_al->add_option("--out", opt.out);
  crep->require_subcommand(1);

  auto* cver = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> verify_kinds = {"all",        "demazure", "biorthogonality",
                                           "weyl-orthogonality", "vacuum-sum", "hull",
                                           "pseries"};
  for (const auto& kind : verify_kinds) {
    auto* sub = cver->add_subcommand(kind);
    sub->add_option("--rank", opt.rank)->required();
    sub->add_option("--qtrunc", opt.qtrunc);
    sub->add_option("--max-weight", opt.max_weight, "coordinate bound of the weight region");
    sub->add_option("--out", opt.out, "write the pairing table CSV here");
  }
  cver->require_subcommand(1);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, std::cout, std::cerr);
    return code == 0 ? 0 : 3;
  }

  try {
    const int q2 = 2 * opt.qtrunc;
    if (cchar->parsed()) {
      RootDatum d(opt.rank);
      CLI::App* sub = cchar->get_subcommands().front();
      const std::string kind = sub->get_name();
      CharSeries result = CharSeries::unit(opt.rank, 0);
      if (kind == "vacuum") {
        result = vacuum_character(d, q2);
      } else {
        FiniteWeight lam = finite_from_labels(parse_labels(opt.weight, opt.rank));
        if (kind == "thin")
          result = thin_character(d, lam);
        else if (kind == "local-weyl")
          result = local_weyl_character(d, lam);
        else if (kind == "slice")
          result = slice_character(d, lam, q2);
        else
          result = global_weyl_character(d, lam, q2);
      }
      emit(result.to_json(), opt.out);
      return 0;
    }
    if (cpoly->parsed()) {
      RootDatum d(opt.rank);
      CLI::App* sub = cpoly->get_subcommands().front();
      FiniteWeight lam = finite_from_labels(parse_labels(opt.weight, opt.rank));
      if (sub->get_name() == "ebar") {
        emit(ebar_polynomial(d, lam).to_json(), opt.out);
      } else {
        int bound = 0;
        for (const auto& c : lam.c)
          bound = std::max(bound, static_cast<int>(std::abs(to_long(c))));
        SliceSolver solver(d, bound, q2);
        int i = solver.families().find(lam);
        emit(solver.families().b_family[i].to_json(), opt.out);
      }
      return 0;
    }
    if (cpair->parsed()) {
      RootDatum d(opt.rank);
      CLI::App* sub = cpair->get_subcommands().front();
      CharSeries f = load_character(opt.left);
      CharSeries g = load_character(opt.right);
      if (f.rank() != opt.rank || g.rank() != opt.rank)
        throw std::invalid_argument("character files disagree with --rank");
      QSeries v = sub->get_name() == "ext" ? pair_ext(f, g, kernel_t0(d, q2))
                                           : pair_sym(f, g, delta_kernel_t0(d, q2));
      emit(v.str(), opt.out);
      return 0;
    }
    if (cdim->parsed()) {
      BDynkinLabels lam(parse_labels(opt.weight, opt.rank));
      std::cout << dim_local_weyl_special(lam).get_str() << "\n";
      return 0;
    }
    if (crep->parsed()) {
      BDynkinLabels lam(parse_labels(opt.weight, opt.rank));
      emit(free_rank_report(lam, q2).to_json(), opt.out);
      return 0;
    }
    if (cver->parsed()) {
      CLI::App* sub = cver->get_subcommands().front();
      const std::string kind = sub->get_name();
      const int l = opt.rank;
      std::vector<CheckResult> results;
      std::ofstream csv;
      std::ostream* csv_out = nullptr;
      if (!opt.out.empty() && (kind == "biorthogonality" || kind == "all")) {
        csv.open(opt.out, std::ios::binary);
        if (!csv) throw std::runtime_error("cannot open output file: " + opt.out);
        csv_out = &csv;
      }
      auto append = [&](std::vector<CheckResult> rs) {
        for (auto& r : rs) results.push_back(std::move(r));
      };
      const int pair_box = opt.max_weight > 0 ? opt.max_weight : (l == 1 ? 2 : 1);
      if (kind == "all" || kind == "demazure") {
        append(verify_realization(l, opt.max_weight > 0 ? opt.max_weight : 3));
        append(verify_demazure(l, opt.max_weight > 0 ? opt.max_weight : 3, opt.qtrunc));
      }
      if (kind == "all" || kind == "biorthogonality")
        append(verify_biorthogonality(l, pair_box, opt.qtrunc, csv_out));
      if (kind == "all" || kind == "weyl-orthogonality")
        append(verify_weyl_orthogonality(l, pair_box, opt.qtrunc));
      if (kind == "all" || kind == "vacuum-sum") {
        int emax = opt.qtrunc - 2;
        if (opt.max_weight > 0) emax = std::min<long>(emax, opt.max_weight * opt.max_weight / 2);
        append(verify_vacuum_sum(l, std::max(emax, 1), opt.qtrunc));
      }
      if (kind == "all" || kind == "hull")
        append(verify_hull_order(l, opt.max_weight > 0 ? opt.max_weight : 2));
      if (kind == "all" || kind == "pseries") {
        append(verify_pseries(std::max(l, 1), std::min(8, opt.qtrunc)));
        append(verify_dimension_table());
      }
      return report_results(results);
    }
  } catch (const PrecisionError& e) {
    std::cerr << "insufficient precision: " << e.what()
              << " (retry with --qtrunc " << std::max(e.suggested_qtrunc, opt.qtrunc + 2)
              << ")\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 3;
}

}  // namespace charlab
