// Copyright 2026 The lrmgray Authors.
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

#include "lrm/cli.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "CLI11.hpp"
#include "json.hpp"
#include "lrm/debruijn.hpp"
#include "lrm/lrm_core.hpp"
#include "lrm/transition.hpp"

namespace lrm::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

BigInt parse_bigint(const std::string& text) {
  if (text.empty() ||
      text.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("not a non-negative integer: '" + text + "'");
  }
  return BigInt(text);
}

template <typename T>
std::string join(const std::vector<T>& items, std::string_view sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) os << sep;
    os << items[i];
  }
  return os.str();
}

std::string perms_line(const LocalPermSequence& f) {
  std::vector<std::string> parts;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto r = f.ranks(k);
    parts.push_back("[" + join(std::vector<int>(r.begin(), r.end()), ",") +
                    "]");
  }
  return "(" + join(parts, ",") + ")";
}

std::string succinct_line(const SuccinctState& s) {
  std::vector<std::string> parts;
  for (std::size_t k = 0; k < s.params().window_count(); ++k) {
    const auto g = s.group(k);
    parts.push_back("(" + join(std::vector<int>(g.begin(), g.end()), ",") +
                    ")");
  }
  return "(" + join(parts, ",") + ")";
}

std::vector<int> flatten(const StateRecord& r) {
  std::vector<int> out;
  for (const auto& g : r.digits) out.insert(out.end(), g.begin(), g.end());
  return out;
}

std::istream& open_input(const std::string& path, std::istream& in,
                         std::ifstream& file) {
  if (path == "-") return in;
  file.open(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  return file;
}

// Commands. Each returns an exit code and throws lrm errors, which run()
// maps to exit codes.

int demod(const std::string& path, std::size_t s, std::size_t t, std::size_t n,
          std::istream& in, std::ostream& out) {
  const LrmParams p = LrmParams::make(s, t, n);
  std::ifstream file;
  std::vector<Charge> values = parse_charges(open_input(path, in, file));
  if (values.size() != n) {
    throw InputError("expected " + std::to_string(n) + " charges, got " +
                     std::to_string(values.size()));
  }
  const LocalPermSequence f = demodulate(ChargeVector(std::move(values)), p);
  out << "perms " << perms_line(f) << "\n";
  out << "succinct " << succinct_line(succinct(f)) << "\n";
  return kOk;
}

int enumerate(std::size_t s, std::size_t t, std::size_t n, std::size_t max_n,
              bool bound_only, std::ostream& out) {
  const LrmParams p = LrmParams::make(s, t, n);
  if (bound_only) {
    out << "bound " << to_decimal(count_bound(p)) << "\n";
    return kOk;
  }
  const StateCensus c = census(p, max_n);
  out << "R " << c.states << "\n";
  out << "Rbar " << c.succinct_states << "\n";
  out << "bound " << to_decimal(count_bound(p)) << "\n";
  return kOk;
}

void emit(const StateRecord& r, bool jsonl, std::ostream& out) {
  out << (jsonl ? to_jsonl(r) : to_text(r)) << "\n";
}

int gray(std::size_t s, std::size_t t, std::size_t n,
         std::optional<std::uint64_t> limit, bool jsonl, bool anchors_only,
         std::ostream& out) {
  const ConstructionParams p = ConstructionParams::make(s, t, n);
  std::uint64_t written = 0;
  auto more = [&] { return !limit || written < *limit; };

  if (anchors_only) {
    AnchorSequence seq = anchors(p);
    for (BigInt i = 0; i < p.L() && more(); ++i, ++written) {
      emit(make_record(seq.next().state, p), jsonl, out);
    }
    return kOk;
  }
  CodeCursor cursor(p);
  while (more()) {
    emit(make_record(cursor.state(), p), jsonl, out);
    ++written;
    cursor.advance();
    if (cursor.at_anchor() && cursor.anchor_index() == 0) break;
  }
  return kOk;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

int verify(std::size_t s, std::size_t t, std::size_t n,
           std::optional<std::uint64_t> limit, bool full, std::ostream& out) {
  const ConstructionParams p = ConstructionParams::make(s, t, n);
  const VerifyReport r = verify_code(p, limit, full);
  out << "params s=" << s << " t=" << t << " n=" << n << "\n";
  out << "L " << to_decimal(r.L) << "\n";
  out << "states " << r.states << "\n";
  out << "anchors " << r.anchors << "\n";
  out << "complete " << yes(r.complete) << "\n";
  out << "distinct " << yes(r.distinct) << "\n";
  out << "adjacent " << yes(r.adjacent) << "\n";
  out << "realizable " << yes(r.realizable) << "\n";
  out << "decodable " << yes(r.decodable) << "\n";
  if (r.complete) {
    out << "cyclic " << yes(r.cyclic) << "\n";
    out << "size>=L " << yes(r.size_at_least_L) << "\n";
  }
  if (!r.first_violation.empty())
    out << "violation " << r.first_violation << "\n";
  out << "result " << (r.passed() ? "pass" : "fail") << "\n";
  return r.passed() ? kOk : kVerificationFailed;
}

std::vector<LocalPermSequence> completions_of(const SuccinctState& s) {
  std::vector<LocalPermSequence> out;
  for_each_completion(s, [&](const LocalPermSequence& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

// Checks a jsonl trace on its own: every record decodes consistently and
// has a realizable completion, records are distinct, and each record is
// one push away from some completion of its predecessor.
int verify_trace(const std::string& path, std::istream& in, std::ostream& out) {
  std::ifstream file;
  std::istream& src = open_input(path, in, file);
  std::optional<ConstructionParams> p;
  std::unordered_set<std::string> seen;
  std::optional<SuccinctState> prev;
  std::vector<LocalPermSequence> prev_completions;
  std::uint64_t count = 0;
  std::string line;
  std::size_t line_no = 0;

  auto fail = [&](const std::string& what) {
    out << "records " << count << "\n";
    out << "violation line " << line_no << ": " << what << "\n";
    out << "result fail\n";
    return kVerificationFailed;
  };

  while (std::getline(src, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const StateRecord r = parse_jsonl(line);
    if (!p) p = ConstructionParams::make(r.s, r.t, r.n);
    if (r.s != p->s() || r.t != p->t() || r.n != p->n()) {
      throw InputError("line " + std::to_string(line_no) +
                       ": parameters differ from the first record");
    }
    const SuccinctState state(p->base(), flatten(r));
    const std::string text = to_text(r);
    try {
      if (make_record(state, *p) != r) {
        return fail("blocks, kind or underline disagree with digits: " + text);
      }
    } catch (const NotACodeword& e) {
      return fail(std::string(e.what()) + ": " + text);
    }
    std::vector<LocalPermSequence> completions = completions_of(state);
    if (completions.empty()) return fail("no realizable completion: " + text);
    if (!seen.insert(state.key()).second)
      return fail("repeated state: " + text);
    if (prev) {
      bool adjacent = false;
      for (const auto& f : prev_completions) {
        for (CellIndex j = 0; j < p->n() && !adjacent; ++j) {
          adjacent = succinct(push_state_unchecked(f, j)) == state;
        }
        if (adjacent) break;
      }
      if (!adjacent) {
        return fail("bad adjacency: " + to_text(make_record(*prev, *p)) +
                    " -> " + text);
      }
    }
    prev = state;
    prev_completions = std::move(completions);
    ++count;
  }
  out << "records " << count << "\n";
  out << "result pass\n";
  return kOk;
}

int debruijn(const std::string& alphabet, std::size_t order,
             const std::string& max_len, std::ostream& out) {
  const BigInt v = parse_bigint(alphabet);
  DeBruijnStream stream(v, order);
  if (stream.period() > parse_bigint(max_len)) {
    throw TooLarge("period " + to_decimal(stream.period()) +
                   " exceeds --max-len " + max_len);
  }
  do {
    out << to_decimal(stream.next());
    out << (stream.position() == 0 ? "\n" : " ");
  } while (stream.position() != 0);
  return kOk;
}

}  // namespace

StateRecord make_record(const SuccinctState& state,
                        const ConstructionParams& p) {
  const DecodedState d = decode_state(state, p);
  StateRecord r;
  r.s = p.s();
  r.t = p.t();
  r.n = p.n();
  r.anchor = !d.mid_transition;
  const auto digits = state.digits();
  for (std::size_t b = 0; b < p.m(); ++b) {
    const auto g = digits.subspan(p.cell(b, 0), p.m());
    r.digits.emplace_back(g.begin(), g.end());
  }
  r.blocks = d.blocks;
  r.underlined = d.underlined;
  return r;
}

std::string to_jsonl(const StateRecord& r) {
  Json j;
  j["params"] = {{"s", r.s}, {"t", r.t}, {"n", r.n}};
  j["kind"] = r.anchor ? "anchor" : "auxiliary";
  j["digits"] = r.digits;
  Json blocks = Json::array();
  for (const BigInt& b : r.blocks) blocks.push_back(to_decimal(b));
  j["blocks"] = std::move(blocks);
  j["underlined"] = r.underlined;
  return j.dump();
}

StateRecord parse_jsonl(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("bad JSON: ") + e.what());
  }
  try {
    StateRecord r;
    const Json& params = j.at("params");
    r.s = params.at("s").get<std::size_t>();
    r.t = params.at("t").get<std::size_t>();
    r.n = params.at("n").get<std::size_t>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "anchor" && kind != "auxiliary") {
      throw InputError("kind must be anchor or auxiliary, got '" + kind + "'");
    }
    r.anchor = kind == "anchor";
    r.digits = j.at("digits").get<std::vector<std::vector<int>>>();
    for (const Json& b : j.at("blocks")) {
      r.blocks.push_back(parse_bigint(b.get<std::string>()));
    }
    r.underlined = j.at("underlined").get<std::size_t>();
    std::size_t total = 0;
    for (const auto& g : r.digits) total += g.size();
    if (total != r.n || r.digits.size() != r.blocks.size()) {
      throw InputError("digit groups do not match n and blocks");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad record: ") + e.what());
  }
}

std::string to_text(const StateRecord& r) {
  const std::string sep = r.t <= 10 ? "" : ",";
  std::vector<std::string> groups;
  for (const auto& g : r.digits) groups.push_back(join(g, sep));
  std::vector<std::string> blocks;
  for (const BigInt& b : r.blocks) blocks.push_back(to_decimal(b));
  return std::string(r.anchor ? "anchor " : "auxiliary ") + join(groups, " ") +
         " blocks=" + join(blocks, ",") +
         " underlined=" + std::to_string(r.underlined);
}

std::vector<Charge> parse_charges(std::istream& in) {
  std::vector<Charge> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line.substr(0, line.find('#')));
    if (text.empty()) continue;
    Charge value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw InputError("line " + std::to_string(line_no) + ": not a number: '" +
                       text + "'");
    }
    out.push_back(value);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Local rank modulation states and Gray codes", "lrmgray"};
  app.require_subcommand(1);

  std::size_t s = 0, t = 0, n = 0;
  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--s", s, "Window step")->required();
    cmd->add_option("--t", t, "Window width")->required();
    cmd->add_option("--n", n, "Number of cells")->required();
  };

  std::string path;
  auto* demod_cmd = app.add_subcommand("demod", "Demodulate a charge file");
  demod_cmd->add_option("file", path, "Charges, one per line ('-' = stdin)")
      ->required();
  add_params(demod_cmd);

  std::size_t max_n = kDefaultEnumerationLimit;
  bool bound_only = false;
  auto* enum_cmd =
      app.add_subcommand("enumerate", "Count states by brute force");
  add_params(enum_cmd);
  enum_cmd->add_option("--max-n", max_n, "Largest n to enumerate")
      ->capture_default_str();
  enum_cmd->add_flag("--bound", bound_only, "Print only the counting bound");

  std::optional<std::uint64_t> limit;
  std::string format = "text";
  bool anchors_only = false;
  auto* gray_cmd = app.add_subcommand("gray", "Stream Gray code codewords");
  add_params(gray_cmd);
  gray_cmd->add_option("--limit", limit, "Stop after this many codewords");
  gray_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"jsonl", "text"}))
      ->capture_default_str();
  gray_cmd->add_flag("--anchors-only", anchors_only, "Emit anchors only");

  bool full = false;
  std::string trace;
  auto* verify_cmd = app.add_subcommand("verify", "Check the Gray code");
  verify_cmd->add_option("--s", s, "Window step");
  verify_cmd->add_option("--t", t, "Window width");
  verify_cmd->add_option("--n", n, "Number of cells");
  verify_cmd->add_option("--limit", limit, "Check only this many codewords");
  verify_cmd->add_flag("--full-realizability", full,
                       "Re-realize every state from its digits");
  verify_cmd->add_option("--trace", trace,
                         "Check a jsonl trace instead ('-' = stdin)");

  std::string alphabet;
  std::size_t order = 0;
  std::string max_len = "1000000";
  auto* db_cmd = app.add_subcommand("debruijn", "Print one de Bruijn period");
  db_cmd->add_option("--V", alphabet, "Alphabet size")->required();
  db_cmd->add_option("--order", order, "Order")->required();
  db_cmd->add_option("--max-len", max_len, "Longest period to print")
      ->capture_default_str();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (demod_cmd->parsed()) return demod(path, s, t, n, in, out);
    if (enum_cmd->parsed()) {
      return enumerate(s, t, n, max_n, bound_only, out);
    }
    if (gray_cmd->parsed()) {
      return gray(s, t, n, limit, format == "jsonl", anchors_only, out);
    }
    if (verify_cmd->parsed()) {
      if (!trace.empty()) return verify_trace(trace, in, out);
      if (verify_cmd->count("--s") + verify_cmd->count("--t") +
              verify_cmd->count("--n") !=
          3) {
        throw InputError("verify needs --s, --t and --n, or --trace");
      }
      return verify(s, t, n, limit, full, out);
    }
    return debruijn(alphabet, order, max_len, out);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kParameterViolation;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kSizeGuard;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace lrm::cli
