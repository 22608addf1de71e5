#include "commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "figures.hpp"
#include "rankmod/constructions.hpp"
#include "rankmod/counting.hpp"
#include "rankmod/document.hpp"
#include "rankmod/errors.hpp"
#include "rankmod/ksnake.hpp"
#include "rankmod/rmgc.hpp"
#include "rankmod/verify.hpp"

namespace rankmod::cli {

namespace {

namespace fs = std::filesystem;

class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::string dash_or(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : std::string("—");
}

std::string size_row_csv(const SizeTable& t) {
  return std::to_string(t.n) + "," + std::to_string(t.m0) + "," + dash_or(t.m1) + "," +
         dash_or(t.m2) + "," + std::to_string(t.bound);
}

std::string size_row_text(const SizeTable& t) {
  return "n=" + std::to_string(t.n) + " m0=" + std::to_string(t.m0) + " m1=" + dash_or(t.m1) +
         " m2=" + dash_or(t.m2) + " bound=" + std::to_string(t.bound);
}

std::string param(const CodeDocument& doc, std::string_view key, std::string fallback) {
  for (const auto& [k, v] : doc.params)
    if (k == key) return v;
  return fallback;
}

// --- construct ------------------------------------------------------------

struct ConstructArgs {
  std::string method;
  int n = 0;
  int variant = 1;
  std::string ksnake_path;
  bool embedded = false;
  std::string start;
  std::string out;
  std::string mode;
  bool codewords = false;
};

KendallSnake load_ksnake(const ConstructArgs& a) {
  if (a.embedded && !a.ksnake_path.empty()) {
    throw PreconditionError("give either --ksnake or --embedded, not both");
  }
  if (a.embedded) return embedded_a5_snake();
  if (a.ksnake_path.empty()) {
    throw PreconditionError("method " + a.method + " needs --ksnake <file> or --embedded");
  }
  return import_ksnake(read_file(a.ksnake_path));
}

std::string ksnake_label(const ConstructArgs& a) {
  return a.embedded ? "embedded" : fs::path(a.ksnake_path).filename().string();
}

Permutation start_or(const ConstructArgs& a, Permutation fallback) {
  if (a.start.empty()) return fallback;
  Permutation p = Permutation::parse(a.start);
  if (p.size() != a.n) throw PreconditionError("--start length disagrees with --n");
  return p;
}

CodeDocument build_document(const ConstructArgs& a) {
  CodeDocument doc{GrayCode{Permutation::identity(1), {}, true, Metric::linf}, a.method, {}, a.codewords};
  if (a.method == "thm1") {
    doc.code = rmgc_snake(a.n).code;
  } else if (a.method == "thm2") {
    doc.code = kendall_lifted_snake(a.n, load_ksnake(a)).code;
    doc.params.emplace_back("ksnake", ksnake_label(a));
  } else if (a.method == "rmgc") {
    const auto& r = build_rmgc(a.n);
    doc.code = GrayCode{Permutation::identity(a.n), r.seq, true, Metric::linf};
    doc.params.emplace_back("required_d", "1");
    doc.params.emplace_back("complete", "true");
  } else if (a.method == "lemma3") {
    if (a.variant != 1 && a.variant != 2) throw PreconditionError("--variant must be 1 or 2");
    if (a.n < 6) throw PreconditionError("rotation block: n must be at least 6, got " + std::to_string(a.n));
    const auto block = rotation_block(start_or(a, rmgc_snake_start(a.n)),
                                      a.variant == 1 ? BlockVariant::preserve : BlockVariant::exchange);
    doc.code = block.as_code();
    doc.params.emplace_back("variant", std::to_string(a.variant));
  } else if (a.method == "lemma7") {
    if (a.start.empty() && a.n % 2 == 0) {
      throw PreconditionError("kendall block: no default start for even n; pass --start");
    }
    const auto ks = load_ksnake(a);
    const auto block = kendall_block(start_or(a, kendall_lifted_start(a.n)), ks.transitions);
    doc.code = block.as_code();
    doc.params.emplace_back("ksnake", ksnake_label(a));
  } else {
    throw PreconditionError("unknown method '" + a.method + "'");
  }
  return doc;
}

VerifyOptions options_for(const CodeDocument& doc, const std::string& mode_flag) {
  VerifyOptions opt;
  opt.mode = mode_flag.empty() ? default_verify_mode(doc.code.size()) : parse_verify_mode(mode_flag);
  const std::string req = param(doc, "required_d", "2");
  if (req != "1" && req != "2") throw ParseError("required_d must be 1 or 2");
  opt.required_distance = req == "1" ? 1 : 2;
  return opt;
}

// A document flagged complete must list every permutation of S_n.
bool completeness_ok(const CodeDocument& doc, std::ostream& os) {
  if (param(doc, "complete", "false") != "true") return true;
  const bool ok = doc.code.n() <= 20 && doc.code.size() == factorial(doc.code.n());
  os << "  complete      " << (ok ? "yes" : "NO") << "\n";
  return ok;
}

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  const CodeDocument doc = build_document(a);
  const auto report = verify_code(doc.code, options_for(doc, a.mode));
  std::ostringstream info;
  const bool complete = completeness_ok(doc, info);
  if (!report.valid() || !complete) {
    err << "refusing to write an invalid code\n" << info.str() << report.render();
    return kExitInvalid;
  }
  const std::string text = serialize(doc);
  std::ostream& log = a.out.empty() ? err : out;
  log << "constructed " << a.method << " n=" << doc.code.n() << " size=" << doc.code.size() << "\n";
  if (a.n >= 4 && a.n <= 20) log << "sizes " << size_row_text(size_table(a.n)) << "\n";
  log << info.str() << report.summary_line() << "\n";
  if (a.out.empty()) {
    out << text;
  } else {
    write_file(a.out, text);
    log << "wrote " << a.out << "\n";
  }
  return kExitOk;
}

// --- verify ---------------------------------------------------------------

int cmd_verify(const std::string& path, const std::string& mode_flag, std::ostream& out) {
  const std::string text = read_file(path);
  switch (detect_file_kind(text)) {
    case FileKind::code_document: {
      const CodeDocument doc = parse_document(text);
      const auto report = verify_code(doc.code, options_for(doc, mode_flag));
      std::ostringstream info;
      const bool complete = completeness_ok(doc, info);
      out << "document method=" << doc.method << " n=" << doc.code.n() << "\n"
          << info.str() << report.render();
      return report.valid() && complete ? kExitOk : kExitInvalid;
    }
    case FileKind::ksnake: {
      const KendallSnake ks = parse_ksnake(text);
      if (!mode_flag.empty() && parse_verify_mode(mode_flag) != VerifyMode::exhaustive) {
        out << "note: K-snake files are always checked exhaustively\n";
      }
      const auto report = verify_ksnake(ks);
      out << "ksnake n=" << ks.n() << "\n" << report.render();
      return is_valid_ksnake(report) ? kExitOk : kExitInvalid;
    }
    case FileKind::rmgc: {
      const RmgcSequence r = parse_rmgc(text);
      const GrayCode code{Permutation::identity(r.n), r.seq, true, Metric::linf};
      VerifyOptions opt;
      opt.mode = mode_flag.empty() ? default_verify_mode(code.size()) : parse_verify_mode(mode_flag);
      opt.required_distance = 1;
      const auto report = verify_code(code, opt);
      const bool complete = r.n <= 20 && code.size() == factorial(r.n);
      out << "rmgc n=" << r.n << "\n  complete      " << (complete ? "yes" : "NO") << "\n"
          << report.render();
      return report.valid() && complete ? kExitOk : kExitInvalid;
    }
    case FileKind::unknown:
      break;
  }
  throw ParseError("'" + path + "' is not a snake document, K-snake or RMGC file");
}

// --- sizes ----------------------------------------------------------------

int cmd_sizes(int from, int to, bool csv, std::ostream& out) {
  if (to == 0) to = from;
  if (from < 4 || to > 20 || from > to) {
    throw PreconditionError("sizes needs 4 <= from <= to <= 20");
  }
  if (csv) {
    out << "n,m0,m1,m2,bound\n";
    for (int n = from; n <= to; ++n) out << size_row_csv(size_table(n)) << "\n";
    return kExitOk;
  }
  out << std::setw(3) << "n" << std::setw(22) << "m0" << std::setw(22) << "m1" << std::setw(22)
      << "m2" << std::setw(22) << "bound" << "\n";
  for (int n = from; n <= to; ++n) {
    const auto t = size_table(n);
    // "—" is three bytes but one column wide.
    auto cell = [](const std::string& s) {
      const std::size_t width = s == "—" ? 22 + 2 : 22;
      std::ostringstream c;
      c << std::setw(static_cast<int>(width)) << s;
      return c.str();
    };
    out << std::setw(3) << n << cell(std::to_string(t.m0)) << cell(dash_or(t.m1))
        << cell(dash_or(t.m2)) << cell(std::to_string(t.bound)) << "\n";
  }
  return kExitOk;
}

// --- figures --------------------------------------------------------------

int cmd_figures(const std::string& out_dir, const std::string& check_dir, std::ostream& out,
                std::ostream& err) {
  if (out_dir.empty() == check_dir.empty()) {
    throw PreconditionError("figures needs exactly one of --out DIR or --check DIR");
  }
  const auto figures = render_figures();
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (const auto& f : figures) {
      write_file((fs::path(out_dir) / f.file_name).string(), f.text);
      out << "wrote " << (fs::path(out_dir) / f.file_name).string() << "\n";
    }
    return kExitOk;
  }
  int status = kExitOk;
  for (const auto& f : figures) {
    const auto path = (fs::path(check_dir) / f.file_name).string();
    std::string committed;
    try {
      committed = read_file(path);
    } catch (const IoError&) {
      err << f.file_name << ": missing\n";
      status = kExitInvalid;
      continue;
    }
    if (const auto diff = first_difference(f, committed)) {
      err << f.file_name << ": line " << diff->line << " differs\n"
          << "  expected: " << diff->expected << "\n"
          << "  actual:   " << diff->actual << "\n";
      status = kExitInvalid;
    } else {
      out << f.file_name << ": ok\n";
    }
  }
  return status;
}

// --- search ---------------------------------------------------------------

struct SearchArgs {
  std::string kind = "max";
  int n = 0;
  std::string metric = "linf";
  bool noncyclic = false;
  std::size_t target = 0;
  std::uint64_t budget = kDefaultSearchBudget;
  std::string out;
};

int cmd_search(const SearchArgs& a, std::ostream& out) {
  if (a.kind == "max") {
    const auto res = exhaustive_max_snake(a.n, parse_metric(a.metric), !a.noncyclic, a.budget);
    out << "best_size=" << res.best_size << " exhausted=" << (res.exhausted ? "true" : "false")
        << " nodes=" << res.nodes << " metric=" << a.metric
        << " cyclic=" << (a.noncyclic ? "false" : "true") << "\n";
    if (!res.exhausted) out << "note: budget reached; best_size is a lower bound\n";
    if (!a.out.empty() && res.witness) {
      CodeDocument doc{*res.witness, "search", {}, true};
      write_file(a.out, serialize(doc));
      out << "wrote " << a.out << "\n";
    }
    return kExitOk;
  }
  if (a.kind == "ksnake") {
    if (a.target == 0) throw PreconditionError("search --kind ksnake needs --target");
    const auto res = search_ksnake(a.n, a.target, a.budget);
    if (!res.snake) {
      out << "not found target=" << a.target << " nodes=" << res.nodes
          << " exhausted=" << (res.exhausted ? "true" : "false") << "\n";
      return kExitInvalid;
    }
    out << "found size=" << res.snake->size() << " nodes=" << res.nodes << "\n";
    const std::string text = format_ksnake(*res.snake);
    if (a.out.empty()) {
      out << text;
    } else {
      write_file(a.out, text);
      out << "wrote " << a.out << "\n";
    }
    return kExitOk;
  }
  throw PreconditionError("--kind must be max or ksnake");
}

// --- import-ksnake ----------------------------------------------------------

int cmd_import_ksnake(const std::string& path, const std::string& out_path, std::ostream& out,
                      std::ostream& err) {
  const KendallSnake ks = import_ksnake(read_file(path));
  const std::string text = format_ksnake(ks);
  std::ostream& log = out_path.empty() ? err : out;
  log << verify_ksnake(ks).summary_line() << "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
    log << "wrote " << out_path << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Snake-in-the-box codes over permutations", "rmsnake"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build, verify and export a code");
  construct->add_option("method,--method", ca.method, "thm1 | thm2 | rmgc | lemma3 | lemma7")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "rmgc", "lemma3", "lemma7"}));
  construct->add_option("--n", ca.n, "Permutation length")->required();
  construct->add_option("--variant", ca.variant, "lemma3 end shape: 1 or 2");
  construct->add_option("--ksnake", ca.ksnake_path, "K-snake file for thm2/lemma7");
  construct->add_flag("--embedded", ca.embedded, "Use the built-in (5,57) K-snake");
  construct->add_option("--start", ca.start, "Start permutation for block methods");
  construct->add_option("--out", ca.out, "Output path (default: stdout)");
  construct->add_option("--mode", ca.mode, "exhaustive | sampled");
  construct->add_flag("--codewords", ca.codewords, "Append the expanded codeword listing");

  std::string verify_path;
  std::string verify_mode;
  auto* verify = app.add_subcommand("verify", "Verify a document, K-snake or RMGC file");
  verify->add_option("file", verify_path)->required();
  verify->add_option("--mode", verify_mode, "exhaustive | sampled");

  int from = 0;
  int to = 0;
  bool csv = false;
  auto* sizes = app.add_subcommand("sizes", "Tabulate construction sizes against the bound");
  sizes->add_option("from", from)->required();
  sizes->add_option("to", to);
  sizes->add_flag("--csv", csv);

  std::string fig_out;
  std::string fig_check;
  auto* figures = app.add_subcommand("figures", "Write or check the figure fixtures");
  figures->add_option("--out", fig_out, "Directory to write into");
  figures->add_option("--check", fig_check, "Directory holding committed fixtures");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Exhaustive oracle searches");
  search->add_option("--kind", sa.kind, "max | ksnake");
  search->add_option("--n", sa.n)->required();
  search->add_option("--metric", sa.metric, "linf | kendall (kind=max)");
  search->add_flag("--noncyclic", sa.noncyclic);
  search->add_option("--target", sa.target, "Required K-snake size (kind=ksnake)");
  search->add_option("--budget", sa.budget, "Node budget");
  search->add_option("--out", sa.out);

  std::string import_path;
  std::string import_out;
  auto* import = app.add_subcommand("import-ksnake", "Validate and normalize a K-snake file");
  import->add_option("file", import_path)->required();
  import->add_option("--out", import_out);

  std::vector<std::string> argv_store{"rmsnake"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "rmsnake: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (*construct) return cmd_construct(ca, out, err);
    if (*verify) return cmd_verify(verify_path, verify_mode, out);
    if (*sizes) return cmd_sizes(from, to, csv, out);
    if (*figures) return cmd_figures(fig_out, fig_check, out, err);
    if (*search) return cmd_search(sa, out);
    if (*import) return cmd_import_ksnake(import_path, import_out, out, err);
  } catch (const VerificationError& e) {
    err << "rmsnake: invalid: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const PreconditionError& e) {
    err << "rmsnake: precondition failed: " << e.what() << "\n";
    return kExitError;
  } catch (const Error& e) {
    err << "rmsnake: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "rmsnake: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace rankmod::cli
