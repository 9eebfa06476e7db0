// mclt: exact combinatorics of peakless pair partitions and the moments of
// the monotone central limit theorem, with machine-readable output.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mclt/mclt.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitSuccess = 0;
constexpr int kExitFailure = 1;   // verification or engine failure
constexpr int kExitUsage = 2;     // argument or format error

std::int64_t env_default_cap() {
  const char* env = std::getenv("MCLT_CAP");
  if (env == nullptr) return mclt::kDefaultEnumerationCap;
  char* end = nullptr;
  const long long parsed = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || parsed < 1)
    throw mclt::InvalidInputError(std::string("invalid MCLT_CAP value: ") +
                                  env);
  return static_cast<std::int64_t>(parsed);
}

std::string labels_line(const std::vector<int>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(labels[i]);
  }
  return out;
}

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

struct Options {
  int pairs = 0;
  int colors = 0;
  bool check = false;
  bool allow_empty = false;
  bool all_maps = false;
  bool rational = false;
  std::string method = "filter";
  std::string format;
  std::string moment_file;
  std::string subset_index;
  std::vector<int> digits;
  std::vector<int> word;
  std::vector<int> orders;
  std::vector<int> color_list;
  int class_order = 4;
  double tolerance = 1e-10;
  std::optional<std::int64_t> cap_flag;
  std::int64_t cap = mclt::kDefaultEnumerationCap;
};

mclt::MomentSequence table_moments(const Options& opt, int max_needed) {
  if (!opt.moment_file.empty()) return mclt::load_moment_file(opt.moment_file);
  return mclt::MomentSequence::bernoulli(max_needed < 2 ? 2 : max_needed);
}

int run_count(const Options& opt) {
  const mclt::BigInt formula =
      mclt::count_peakless(opt.pairs, opt.colors, opt.allow_empty);
  std::cout << formula << "\n";
  if (opt.check) {
    const auto enumerated =
        mclt::enumerate_peakless(opt.pairs, opt.colors,
                                 mclt::PeaklessMethod::filter, opt.cap,
                                 opt.allow_empty);
    const bool match =
        mclt::BigInt(static_cast<std::int64_t>(enumerated.size())) == formula;
    std::cout << "check: enumerated " << enumerated.size() << " -> "
              << (match ? "match" : "MISMATCH") << "\n";
    if (!match) return kExitFailure;
  }
  return kExitSuccess;
}

int run_enumerate(const Options& opt) {
  const mclt::PeaklessMethod method = opt.method == "paint"
                                          ? mclt::PeaklessMethod::paint
                                          : mclt::PeaklessMethod::filter;
  const std::vector<mclt::ColorMap> maps =
      opt.all_maps ? mclt::enumerate_pair_maps(opt.pairs, opt.colors, opt.cap,
                                               opt.allow_empty)
                   : mclt::enumerate_peakless(opt.pairs, opt.colors, method,
                                              opt.cap, opt.allow_empty);
  if (opt.format == "json") {
    ordered_json doc;
    doc["pairs"] = opt.pairs;
    doc["colors"] = opt.colors;
    doc["kind"] = opt.all_maps ? "pair" : "peakless";
    if (!opt.all_maps) doc["method"] = opt.method;
    doc["count"] = maps.size();
    auto& rows = doc["maps"] = ordered_json::array();
    for (const auto& f : maps) rows.push_back(f.labels);
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& f : maps) std::cout << labels_line(f.labels) << "\n";
  }
  return kExitSuccess;
}

int run_paint(const Options& opt) {
  const bool single = !opt.subset_index.empty() || !opt.digits.empty();
  if (single) {
    mclt::PaintRank rank;
    rank.subset_index = opt.subset_index.empty()
                            ? mclt::BigInt(0)
                            : mclt::BigInt::from_string(opt.subset_index);
    rank.digits = opt.digits;
    const mclt::ColorMap f = mclt::paint_unrank(opt.pairs, opt.colors, rank);
    if (opt.format == "json") {
      ordered_json doc;
      doc["pairs"] = opt.pairs;
      doc["colors"] = opt.colors;
      doc["subset_index"] = rank.subset_index.to_string();
      doc["digits"] = rank.digits;
      doc["labels"] = f.labels;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << labels_line(f.labels) << "\n";
    }
    return kExitSuccess;
  }

  // No rank given: list every valid rank with its painted map.
  mclt::detail::check_cap(mclt::count_peakless(opt.pairs, opt.colors), opt.cap);
  const std::int64_t subsets =
      mclt::binomial(opt.colors, opt.pairs).to_int64();
  ordered_json rows = ordered_json::array();
  for (std::int64_t si = 0; si < subsets; ++si) {
    std::vector<int> digits(static_cast<std::size_t>(opt.pairs), 0);
    for (;;) {
      const mclt::ColorMap f = mclt::paint_unrank(
          opt.pairs, opt.colors, mclt::PaintRank{mclt::BigInt(si), digits});
      if (opt.format == "json") {
        ordered_json row;
        row["subset_index"] = std::to_string(si);
        row["digits"] = digits;
        row["labels"] = f.labels;
        rows.push_back(row);
      } else {
        std::cout << si << " " << join_ints(digits, ',') << " "
                  << labels_line(f.labels) << "\n";
      }
      int k = opt.pairs - 1;
      for (; k >= 0; --k) {
        const int radix = 2 * (opt.pairs - k) - 1;
        if (++digits[static_cast<std::size_t>(k)] < radix) break;
        digits[static_cast<std::size_t>(k)] = 0;
      }
      if (k < 0) break;
    }
  }
  if (opt.format == "json") {
    ordered_json doc;
    doc["pairs"] = opt.pairs;
    doc["colors"] = opt.colors;
    doc["count"] = rows.size();
    doc["maps"] = std::move(rows);
    std::cout << doc.dump(2) << "\n";
  }
  return kExitSuccess;
}

int run_moment(const Options& opt) {
  const int order = static_cast<int>(opt.word.size());
  const mclt::MomentSequence mu = table_moments(opt, order);
  const mclt::Rational value =
      mclt::reduce_monotone(opt.word, mclt::MomentLookup(mu));
  std::cout << mclt::render_rational(value, opt.rational) << "\n";
  return kExitSuccess;
}

int run_table(const Options& opt) {
  const std::vector<int> orders =
      opt.orders.empty() ? std::vector<int>{2, 4, 6, 8} : opt.orders;
  const std::vector<int> colors =
      opt.color_list.empty() ? std::vector<int>{5, 10, 20, 40}
                             : opt.color_list;
  int max_order = 0;
  for (int m : orders) {
    if (m < 0) throw mclt::InvalidInputError("moment order must be >= 0");
    max_order = std::max(max_order, m);
  }
  const mclt::MomentSequence mu = table_moments(opt, max_order);

  struct Row {
    int N, m;
    std::string normalized, pair_sum, limit, abs_error;
  };
  std::vector<Row> rows;
  for (int m : orders) {
    const auto profile = mclt::pattern_moment_profile(m, mu, opt.cap);
    const mclt::Rational limit =
        mclt::limit_moment(m, mclt::IndependenceClass::monotone);
    for (int N : colors) {
      Row row;
      row.N = N;
      row.m = m;
      const mclt::Rational sum = mclt::sum_moment_from_profile(N, profile);
      const mclt::Rational pair_sum =
          mclt::pair_partition_normalized_sum(N, m, mu, opt.cap);
      row.pair_sum = mclt::render_rational(pair_sum, opt.rational);
      row.limit = mclt::render_rational(limit, opt.rational);
      if (m % 2 == 0) {
        const mclt::Rational normalized =
            sum / mclt::Rational(mclt::BigInt::pow(
                      mclt::BigInt(N), static_cast<unsigned>(m / 2)));
        row.normalized = mclt::render_rational(normalized, opt.rational);
        row.abs_error =
            mclt::render_rational((normalized - limit).abs(), opt.rational);
      } else {
        const double normalized =
            sum.to_double() / std::pow(static_cast<double>(N),
                                       static_cast<double>(m) / 2.0);
        row.normalized = mclt::render_double(normalized);
        row.abs_error =
            mclt::render_double(std::abs(normalized - limit.to_double()));
      }
      rows.push_back(std::move(row));
    }
  }

  if (opt.format == "json") {
    ordered_json doc;
    ordered_json config;
    config["orders"] = orders;
    config["colors"] = colors;
    config["moments"] =
        opt.moment_file.empty() ? "bernoulli" : opt.moment_file;
    config["cap"] = opt.cap;
    config["rational"] = opt.rational;
    doc["config"] = std::move(config);
    auto& out_rows = doc["rows"] = ordered_json::array();
    for (const Row& row : rows) {
      ordered_json r;
      r["N"] = row.N;
      r["m"] = row.m;
      r["normalized"] = row.normalized;
      r["pair_sum"] = row.pair_sum;
      r["limit"] = row.limit;
      r["abs_error"] = row.abs_error;
      out_rows.push_back(std::move(r));
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "N,m,normalized,pair_sum,limit,abs_error\n";
    for (const Row& row : rows)
      std::cout << row.N << "," << row.m << "," << row.normalized << ","
                << row.pair_sum << "," << row.limit << "," << row.abs_error
                << "\n";
  }
  return kExitSuccess;
}

int run_classes(const Options& opt) {
  const int order = opt.class_order;
  if (order < 0) throw mclt::InvalidInputError("order must be >= 0");
  mclt::BigInt all(0), noncrossing(0), interval(0), peakless(0);
  if (order == 0) {
    all = noncrossing = interval = peakless = mclt::BigInt(1);
  } else if (order % 2 == 0) {
    const int m = order / 2;
    for (const mclt::ColorMap& f :
         mclt::enumerate_pair_maps(m, m, opt.cap)) {
      // keep one representative per pairing: colors in first-occurrence order
      int next = 1;
      bool canonical = true;
      std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
      for (int c : f.labels) {
        if (seen[static_cast<std::size_t>(c)]) continue;
        seen[static_cast<std::size_t>(c)] = true;
        if (c != next++) {
          canonical = false;
          break;
        }
      }
      if (!canonical) continue;
      const mclt::ClassFlags flags = mclt::classify(f);
      all += mclt::BigInt(1);
      if (flags.noncrossing) noncrossing += mclt::BigInt(1);
      if (flags.interval) interval += mclt::BigInt(1);
    }
    peakless = mclt::BigInt(static_cast<std::int64_t>(
        mclt::enumerate_peakless(m, m, mclt::PeaklessMethod::filter, opt.cap)
            .size()));
  }
  const auto limit = [&](mclt::IndependenceClass cls) {
    return mclt::render_rational(mclt::limit_moment(order, cls), opt.rational);
  };
  std::cout << "class,count,limit\n";
  std::cout << "monotone," << peakless << ","
            << limit(mclt::IndependenceClass::monotone) << "\n";
  std::cout << "commutative," << all << ","
            << limit(mclt::IndependenceClass::commutative) << "\n";
  std::cout << "free," << noncrossing << ","
            << limit(mclt::IndependenceClass::free) << "\n";
  std::cout << "boolean," << interval << ","
            << limit(mclt::IndependenceClass::boolean) << "\n";
  return kExitSuccess;
}

int run_arcsine(const Options& opt) {
  const std::vector<int> orders =
      opt.orders.empty() ? std::vector<int>{0, 1, 2, 4, 6, 8, 10, 12}
                         : opt.orders;
  mclt::QuadratureSpec spec;
  spec.tolerance = opt.tolerance;
  std::cout << "m,closed,quadrature,abs_error\n";
  for (int m : orders) {
    const mclt::Rational closed = mclt::arcsine_moment_closed(m);
    const double quad = mclt::arcsine_moment_quadrature(m, spec);
    std::cout << m << "," << mclt::render_rational(closed, opt.rational)
              << "," << mclt::render_double(quad) << ","
              << mclt::render_double(std::abs(quad - closed.to_double()))
              << "\n";
  }
  return kExitSuccess;
}

int run_verify(const Options& opt) {
  mclt::VerifyConfig config;
  config.cap = opt.cap;
  config.quadrature_tolerance = opt.tolerance;
  const std::vector<mclt::PropertyResult> results =
      mclt::run_verification(config);
  int failed = 0, skipped = 0;
  for (const auto& result : results) {
    switch (result.status) {
      case mclt::PropertyStatus::pass:
        std::cout << "PASS " << result.name << "\n";
        break;
      case mclt::PropertyStatus::fail:
        ++failed;
        std::cout << "FAIL " << result.name << ": " << result.detail << "\n";
        break;
      case mclt::PropertyStatus::skip:
        ++skipped;
        std::cout << "SKIP " << result.name << ": " << result.detail << "\n";
        break;
    }
  }
  std::cout << results.size() << " properties: "
            << (results.size() - failed - skipped) << " passed, " << failed
            << " failed, " << skipped << " skipped\n";
  return failed == 0 ? kExitSuccess : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Peakless pair partitions and monotone central limit theorem moments, "
      "in exact arithmetic"};
  app.require_subcommand(1);

  Options opt;

  auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--cap", opt.cap_flag,
                    "enumeration size cap (overrides MCLT_CAP)")
        ->check(CLI::PositiveNumber);
  };

  auto* count = app.add_subcommand(
      "count", "count peakless pair partitions: C(N,m) * (2m-1)!!");
  count->add_option("-m,--pairs", opt.pairs, "number of pairs m")->required();
  count->add_option("-N,--colors", opt.colors, "number of colors N")
      ->required();
  count->add_flag("--check", opt.check,
                  "also enumerate by brute force and compare");
  count->add_flag("--allow-empty", opt.allow_empty,
                  "admit the empty partition (m = 0)");
  add_cap(count);

  auto* enumerate = app.add_subcommand(
      "enumerate", "list pair partitions in lexicographic label order");
  enumerate->add_option("-m,--pairs", opt.pairs, "number of pairs m")
      ->required();
  enumerate->add_option("-N,--colors", opt.colors, "number of colors N")
      ->required();
  enumerate
      ->add_option("--method", opt.method,
                   "peakless enumeration method: filter or paint")
      ->check(CLI::IsMember({"filter", "paint"}));
  enumerate->add_flag("--all", opt.all_maps,
                      "list all pair maps, not only peakless ones");
  enumerate->add_flag("--allow-empty", opt.allow_empty,
                      "admit the empty partition (m = 0)");
  enumerate->add_option("--format", opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  add_cap(enumerate);

  auto* paint = app.add_subcommand(
      "paint",
      "run the painting generator: highest color onto a chosen adjacent "
      "pair, repeatedly");
  paint->add_option("-m,--pairs", opt.pairs, "number of pairs m")->required();
  paint->add_option("-N,--colors", opt.colors, "number of colors N")
      ->required();
  paint->add_option("--subset-index", opt.subset_index,
                    "combinadic index of the color subset (default 0)");
  paint->add_option("--digits", opt.digits,
                    "painting digits d1,...,dm (pair choice per step)")
      ->delimiter(',');
  paint->add_option("--format", opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  add_cap(paint);

  auto* moment = app.add_subcommand(
      "moment", "reduce one word to its mixed moment under monotone "
                "independence");
  moment->add_option("--word", opt.word, "variable indices, e.g. 1,2,2,1")
      ->required()
      ->delimiter(',');
  moment->add_option("--moments", opt.moment_file,
                     "moment sequence JSON file (default: symmetric "
                     "Bernoulli)");
  moment->add_flag("--rational", opt.rational,
                   "print non-integers as p/q, never as decimals");

  auto* table = app.add_subcommand(
      "table", "CLT convergence table of normalized moments vs the arcsine "
               "limit");
  table->add_option("--order", opt.orders, "moment orders m (default 2,4,6,8)")
      ->delimiter(',');
  table
      ->add_option("-N,--colors", opt.color_list,
                   "variable counts N (default 5,10,20,40)")
      ->delimiter(',');
  table->add_option("--moments", opt.moment_file,
                    "moment sequence JSON file (default: symmetric "
                    "Bernoulli)");
  table->add_option("--format", opt.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_flag("--rational", opt.rational,
                  "print non-integers as p/q, never as decimals");
  add_cap(table);

  auto* classes = app.add_subcommand(
      "classes", "pairing counts and limit moments of the four independence "
                 "classes");
  classes->add_option("--order", opt.class_order,
                      "moment order 2m (default 4); counts refer to pairings "
                      "of 2m points, for monotone to peakless maps onto m "
                      "ordered colors");
  classes->add_flag("--rational", opt.rational,
                    "print non-integers as p/q, never as decimals");
  add_cap(classes);

  auto* arcsine = app.add_subcommand(
      "arcsine", "check arcsine moments: closed form vs quadrature");
  arcsine->add_option("--order", opt.orders,
                      "moment orders (default 0,1,2,4,6,8,10,12)")
      ->delimiter(',');
  arcsine->add_option("--tolerance", opt.tolerance,
                      "quadrature tolerance (default 1e-10)");
  arcsine->add_flag("--rational", opt.rational,
                    "print non-integers as p/q, never as decimals");

  auto* verify = app.add_subcommand(
      "verify", "run the full property suite and report pass/fail/skip");
  verify->add_option("--tolerance", opt.tolerance,
                     "quadrature tolerance (default 1e-10)");
  add_cap(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    opt.cap = opt.cap_flag ? *opt.cap_flag : env_default_cap();
    if (!(opt.tolerance > 0.0))
      throw mclt::InvalidInputError("tolerance must be positive");
    if (*count) return run_count(opt);
    if (*enumerate) return run_enumerate(opt);
    if (*paint) return run_paint(opt);
    if (*moment) return run_moment(opt);
    if (*table) return run_table(opt);
    if (*classes) return run_classes(opt);
    if (*arcsine) return run_arcsine(opt);
    if (*verify) return run_verify(opt);
  } catch (const mclt::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "run '" << (argv && argv[0] ? argv[0] : "mclt")
              << " --help' for usage\n";
    return kExitUsage;
  } catch (const mclt::MomentFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitSuccess;
}
