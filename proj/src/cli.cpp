#include "wkit/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>

#include "CLI11.hpp"
#include "wkit/groupring.hpp"
#include "wkit/hadamard.hpp"
#include "wkit/seqcore.hpp"
#include "wkit/theorems.hpp"

namespace wkit::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto blank = [](char ch) {
    return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n';
  };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

// Calls `fn(line_number, line)` for every non-blank, non-comment line.
void for_each_record(std::istream& in,
                     const std::function<void(std::size_t, std::string_view)>& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    fn(number, line);
  }
}

void report_parse_error(std::ostream& err, std::size_t line,
                        const ParseError& e) {
  err << "line " << line << ", column " << e.column() << ": " << e.what()
      << '\n';
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

int worse(int a, int b) { return a > b ? a : b; }

}  // namespace

int cmd_verify(std::istream& in, std::ostream& out, std::ostream& err) {
  int status = kSuccess;
  for_each_record(in, [&](std::size_t number, std::string_view line) {
    std::optional<WilliamsonQuadruple> parsed;
    try {
      parsed.emplace(parse_quadruple(line));
    } catch (const ParseError& e) {
      report_parse_error(err, number, e);
      status = worse(status, kUsageError);
      return;
    }
    const WilliamsonQuadruple& q = *parsed;
    const bool even = q.order() % 2 == 0;
    const bool williamson = is_williamson(q);
    out << q.to_text() << "  williamson=" << verdict(williamson);
    if (!williamson) {
      // Theorem checks are only defined for Williamson input.
      out << " product=SKIP" << (even ? " mod4=SKIP" : "") << " hall=SKIP\n";
      status = worse(status, kVerificationFailure);
      return;
    }
    const bool product =
        even ? product_theorem_even_check(q) : product_theorem_odd_check(q);
    const bool mod4 = !even || corollary_mod4_check(q);
    const bool hall = hall_identity_check(q);
    out << " product=" << verdict(product);
    if (even) out << " mod4=" << verdict(mod4);
    out << " hall=" << verdict(hall) << '\n';
    if (!(product && mod4 && hall)) {
      status = worse(status, kVerificationFailure);
    }
  });
  return status;
}

int cmd_search(const SearchConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    write_results(out, cfg, search(cfg));
  } catch (const ConfigError& e) {
    err << "search: " << e.what() << '\n';
    return kUsageError;
  }
  return kSuccess;
}

int cmd_compress(std::istream& in, std::ostream& out, std::ostream& err) {
  int status = kSuccess;
  for_each_record(in, [&](std::size_t number, std::string_view line) {
    const std::string_view body = trim(line);
    const std::size_t offset = body.data() - line.data();
    try {
      const PmOneSequence s = parse_sequence(body);
      if (s.size() % 2 != 0) {
        err << "line " << number << ": 2-compression needs even length, got "
            << s.size() << '\n';
        status = worse(status, kUsageError);
        return;
      }
      out << compress2(s).to_text() << '\n';
    } catch (const ParseError& e) {
      report_parse_error(err, number, ParseError(e.what(), offset + e.column()));
      status = worse(status, kUsageError);
    }
  });
  return status;
}

int cmd_hadamard(std::istream& in, std::ostream& out, std::ostream& err) {
  int status = kSuccess;
  for_each_record(in, [&](std::size_t number, std::string_view line) {
    std::optional<WilliamsonQuadruple> parsed;
    try {
      parsed.emplace(parse_quadruple(line));
    } catch (const ParseError& e) {
      report_parse_error(err, number, e);
      status = worse(status, kUsageError);
      return;
    }
    if (!is_williamson(*parsed)) {
      err << "line " << number << ": " << parsed->to_text()
          << " is not a Williamson quadruple; refusing to build a matrix\n";
      status = worse(status, kVerificationFailure);
      return;
    }
    const SquareMatrix h = williamson_array(*parsed);
    if (!is_hadamard(h)) {
      err << "line " << number << ": constructed matrix of order " << h.order()
          << " is not Hadamard\n";
      status = worse(status, kVerificationFailure);
      return;
    }
    write_matrix_text(out, h);
  });
  return status;
}

int cmd_check(std::size_t first, std::size_t last, std::size_t workers,
              std::ostream& out, std::ostream& err) {
  int status = kSuccess;
  for (std::size_t n = first; n <= last; ++n) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.worker_count = workers;
    SearchResult result;
    try {
      result = search(cfg);
    } catch (const ConfigError& e) {
      err << "check: " << e.what() << '\n';
      return kUsageError;
    }
    const bool even = n % 2 == 0;
    std::size_t failures = 0;
    for (const auto& q : result.quadruples) {
      bool ok = matrix_williamson_check(q) && hall_identity_check(q) &&
                is_hadamard(williamson_array(q));
      if (even) {
        const bool product = product_theorem_even_check(q);
        ok = ok && product && corollary_mod4_check(q) &&
             even_coefficient_parity_check(q) == product;
      } else {
        ok = ok && product_theorem_odd_check(q);
      }
      if (!ok) {
        ++failures;
        err << "n=" << n << ": check failed for " << q.to_text() << '\n';
      }
    }
    out << "n=" << n << " found=" << result.report.raw_count
        << " canonical=" << result.report.canonical_count
        << " theorems=" << verdict(failures == 0) << '\n';
    if (failures) status = kVerificationFailure;
  }
  return status;
}

namespace {

// Opens --in/--out targets, defaulting to the standard streams.
struct Streams {
  std::ifstream file_in;
  std::ofstream file_out;
  std::istream* in = &std::cin;
  std::ostream* out = &std::cout;

  bool open(const std::string& in_path, const std::string& out_path) {
    if (!in_path.empty()) {
      file_in.open(in_path);
      if (!file_in) {
        std::cerr << "cannot open input file " << in_path << '\n';
        return false;
      }
      in = &file_in;
    }
    if (!out_path.empty()) {
      file_out.open(out_path);
      if (!file_out) {
        std::cerr << "cannot open output file " << out_path << '\n';
        return false;
      }
      out = &file_out;
    }
    return true;
  }
};

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Williamson sequence toolkit"};
  app.require_subcommand(1);

  std::string in_path;
  std::string out_path;
  auto add_io = [&](CLI::App* sub, bool input) {
    if (input) sub->add_option("--in", in_path, "Input file (default stdin)");
    sub->add_option("--out", out_path, "Output file (default stdout)");
  };

  auto* verify = app.add_subcommand("verify", "Verify quadruples line by line");
  add_io(verify, true);

  SearchConfig cfg;
  bool canonical = false;
  bool no_product = false;
  bool no_mod4 = false;
  bool no_rowsum = false;
  auto* search_cmd =
      app.add_subcommand("search", "Enumerate all Williamson quadruples of order n");
  search_cmd->add_option("--n", cfg.n, "Order")->required();
  search_cmd->add_flag("--canonical", canonical,
                       "List one representative per equivalence class");
  search_cmd->add_flag("--no-product-filter", no_product,
                       "Disable product-theorem pruning");
  search_cmd->add_flag("--no-mod4-filter", no_mod4,
                       "Disable mod-4 compression pruning");
  search_cmd->add_flag("--no-rowsum-filter", no_rowsum,
                       "Disable row-sum cell skipping");
  search_cmd->add_option("--workers", cfg.worker_count, "Worker threads")
      ->check(CLI::PositiveNumber);
  add_io(search_cmd, false);

  auto* compress =
      app.add_subcommand("compress", "2-compress even-length sequences");
  add_io(compress, true);

  auto* hadamard =
      app.add_subcommand("hadamard", "Build the order-4n Hadamard matrix");
  add_io(hadamard, true);

  std::size_t check_n = 0;
  std::size_t check_workers = 1;
  auto* check = app.add_subcommand(
      "check", "Search orders 1..8 (or --n) and check every theorem on the results");
  check->add_option("--n", check_n, "Single order to check")
      ->check(CLI::PositiveNumber);
  check->add_option("--workers", check_workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  add_io(check, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  Streams io;
  if (!io.open(in_path, out_path)) return kUsageError;

  try {
    if (*verify) return cmd_verify(*io.in, *io.out, std::cerr);
    if (*compress) return cmd_compress(*io.in, *io.out, std::cerr);
    if (*hadamard) return cmd_hadamard(*io.in, *io.out, std::cerr);
    if (*search_cmd) {
      cfg.canonical_only = canonical;
      cfg.use_product_filter = !no_product;
      cfg.use_mod4_filter = !no_mod4;
      cfg.use_rowsum_prefilter = !no_rowsum;
      return cmd_search(cfg, *io.out, std::cerr);
    }
    if (*check) {
      const std::size_t first = check_n ? check_n : 1;
      const std::size_t last = check_n ? check_n : 8;
      return cmd_check(first, last, check_workers, *io.out, std::cerr);
    }
  } catch (const ConfigError& e) {
    std::cerr << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace wkit::cli
