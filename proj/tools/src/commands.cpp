#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "moca/serial.hpp"

namespace mocakit {

namespace {

using moca::ValidationError;
using moca::serial::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  json j;
  in >> j;
  return j;
}

// Writes to stdout and, when requested, to --out.
void emit(const GlobalOptions& opt, const std::string& text) {
  std::cout << text;
  if (opt.out_path) {
    std::ofstream out(*opt.out_path);
    if (!out) throw std::ios_base::failure("cannot write " + *opt.out_path);
    out << text;
  }
}

void emit_json(const GlobalOptions& opt, const json& j) { emit(opt, j.dump(2) + "\n"); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
  try {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ValidationError(std::string("cannot parse ") + what + ": " + text);
  }
}

// Rule grammar: "wolfram:150:d3" or "linear:q2:1,1,1".
moca::ca::LocalRule parse_rule_arg(const std::string& text) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.size() == 3 && parts[0] == "wolfram") {
    if (parts[2].size() < 2 || parts[2][0] != 'd') {
      throw ValidationError("wolfram rule needs a d<k> diameter suffix, e.g. wolfram:150:d3");
    }
    const unsigned d = static_cast<unsigned>(parse_u64(parts[2].substr(1), "diameter"));
    return moca::ca::LocalRule::from_wolfram(d, parse_u64(parts[1], "wolfram code"));
  }
  if (parts.size() == 3 && parts[0] == "linear") {
    if (parts[1].empty() || parts[1][0] != 'q') {
      throw ValidationError("linear rule needs a q<modulus> field, e.g. linear:q2:1,0,1");
    }
    const moca::gf::FieldSpec field(
        static_cast<moca::gf::Elem>(parse_u64(parts[1].substr(1), "field modulus")));
    std::vector<moca::gf::Elem> coeffs;
    for (const std::string& c : split(parts[2], ',')) {
      coeffs.push_back(static_cast<moca::gf::Elem>(parse_u64(c, "coefficient")));
    }
    return moca::ca::LocalRule::linear(field, std::move(coeffs));
  }
  throw ValidationError("unrecognized rule spec: " + text);
}

std::vector<moca::ca::LocalRule> load_family_rules(const std::string& path) {
  const moca::linear::MocaFamily family = moca::serial::family_from_json(read_json_file(path));
  return moca::linear::family_rules(family);
}

std::pair<moca::ca::LocalRule, moca::ca::LocalRule> load_pair(const std::string& path) {
  return moca::serial::pair_from_json(read_json_file(path));
}

std::string hex_of_bits(const std::vector<moca::gf::Elem>& bits) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    unsigned nibble = 0;
    for (std::size_t j = 0; j < 4 && i + j < bits.size(); ++j) {
      nibble |= static_cast<unsigned>(bits[i + j] & 1) << j;
    }
    out.push_back(digits[nibble]);
  }
  return out;
}

std::vector<moca::gf::Elem> bits_of_hex(const std::string& hex, std::size_t count) {
  std::vector<moca::gf::Elem> bits;
  bits.reserve(hex.size() * 4);
  for (char ch : hex) {
    unsigned nibble;
    if (ch >= '0' && ch <= '9') {
      nibble = static_cast<unsigned>(ch - '0');
    } else if (ch >= 'a' && ch <= 'f') {
      nibble = static_cast<unsigned>(ch - 'a' + 10);
    } else if (ch >= 'A' && ch <= 'F') {
      nibble = static_cast<unsigned>(ch - 'A' + 10);
    } else {
      throw ValidationError("invalid hex digit in seed");
    }
    for (unsigned j = 0; j < 4; ++j) bits.push_back((nibble >> j) & 1);
  }
  if (bits.size() < count) throw ValidationError("seed shorter than the state width");
  bits.resize(count);
  return bits;
}

std::string format_hex64(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << v;
  return out.str();
}

}  // namespace

int run_latin(const GlobalOptions& opt, const std::string& rule_arg) {
  const moca::ca::LocalRule rule = parse_rule_arg(rule_arg);
  const moca::designs::LatinSquare square = moca::designs::cayley_table(rule);
  if (opt.json) {
    emit_json(opt, moca::serial::square_to_json(square));
  } else {
    emit(opt, moca::serial::square_to_text(square));
  }
  return 0;
}

int run_orthogonal(const GlobalOptions& opt, const std::string& rule_a,
                   const std::string& rule_b, const std::string& pair_path) {
  std::optional<std::pair<moca::ca::LocalRule, moca::ca::LocalRule>> rules;
  if (!pair_path.empty()) {
    rules = load_pair(pair_path);
  } else if (!rule_a.empty() && !rule_b.empty()) {
    rules = std::make_pair(parse_rule_arg(rule_a), parse_rule_arg(rule_b));
  } else {
    throw ValidationError("orthogonal needs --pair or two --rule arguments");
  }
  const bool linear = rules->first.is_linear() && rules->second.is_linear();
  const bool verdict =
      linear ? moca::linear::are_orthogonal_linear(rules->first, rules->second)
             : moca::nonlinear::are_orthogonal_rules(rules->first, rules->second);
  if (opt.json) {
    emit_json(opt, json{{"orthogonal", verdict},
                        {"method", linear ? "gcd" : "superposition"}});
  } else {
    emit(opt, std::string("orthogonal: ") + (verdict ? "true" : "false") + "\n");
  }
  return 0;
}

int run_enumerate_linear(const GlobalOptions& opt, std::uint32_t q, unsigned n,
                         bool count_only) {
  const std::uint64_t count = moca::linear::count_coprime_pairs(q, n);
  if (count_only) {
    if (opt.json) {
      emit_json(opt, json{{"q", q}, {"n", n}, {"count", count}});
    } else {
      emit(opt, std::to_string(count) + "\n");
    }
    return 0;
  }
  const auto pairs = moca::linear::enumerate_coprime_pairs(q, n);
  if (pairs.size() != count) {
    throw ValidationError("enumeration disagrees with the closed form");
  }
  if (opt.json) {
    json out = json::array();
    for (const auto& [a, b] : pairs) {
      out.push_back(json{{"p", moca::serial::poly_to_json(a)},
                         {"q", moca::serial::poly_to_json(b)}});
    }
    emit_json(opt, json{{"q", q}, {"n", n}, {"count", count}, {"pairs", out}});
  } else {
    std::ostringstream text;
    for (const auto& [a, b] : pairs) {
      text << moca::serial::poly_to_json(a).dump() << ' '
           << moca::serial::poly_to_json(b).dump() << '\n';
    }
    emit(opt, text.str());
  }
  return 0;
}

int run_max_family(const GlobalOptions& opt, std::uint32_t q, unsigned n, bool size_only) {
  const moca::linear::MocaFamily family = moca::linear::max_family(q, n);
  if (size_only) {
    if (opt.json) {
      emit_json(opt, json{{"q", q}, {"n", n}, {"size", family.size()}});
    } else {
      emit(opt, std::to_string(family.size()) + "\n");
    }
    return 0;
  }
  emit_json(opt, moca::serial::family_to_json(family));
  return 0;
}

int run_search_nonlinear(const GlobalOptions& opt, unsigned d, bool nonlinear_only,
                         bool dedup_unordered, bool confirm_long,
                         const std::string& checkpoint_path) {
  if (d >= 6 && !confirm_long) {
    throw ValidationError("diameter 6 search is long-running; pass --confirm-long");
  }
  const std::uint64_t total = moca::nonlinear::count_pairwise_balanced(d);
  std::uint64_t next_rank = 0;
  std::vector<moca::nonlinear::SearchResult> results;
  if (!checkpoint_path.empty()) {
    std::ifstream in(checkpoint_path);
    if (in) {
      json cp;
      in >> cp;
      if (cp.value("d", 0u) == d && cp.value("nonlinear_only", false) == nonlinear_only) {
        next_rank = cp.value("next_rank", std::uint64_t{0});
        for (const json& r : cp.value("results", json::array())) {
          results.push_back({r.at("rank").get<std::uint64_t>(),
                             r.at("f").get<std::uint64_t>(), r.at("g").get<std::uint64_t>(),
                             r.at("nl_f").get<std::uint64_t>(),
                             r.at("nl_g").get<std::uint64_t>(),
                             std::stoull(r.at("cert").get<std::string>(), nullptr, 16)});
        }
      }
    }
  }
  const std::uint64_t chunk = std::uint64_t{1} << 22;
  auto save_checkpoint = [&](std::uint64_t done) {
    if (checkpoint_path.empty()) return;
    json rs = json::array();
    for (const auto& r : results) {
      rs.push_back(json{{"rank", r.rank},
                        {"f", r.wolfram_f},
                        {"g", r.wolfram_g},
                        {"nl_f", r.nonlinearity_f},
                        {"nl_g", r.nonlinearity_g},
                        {"cert", format_hex64(r.certificate)}});
    }
    std::ofstream out(checkpoint_path);
    if (!out) throw std::ios_base::failure("cannot write " + checkpoint_path);
    out << json{{"d", d},
                {"nonlinear_only", nonlinear_only},
                {"next_rank", done},
                {"results", rs}}
               .dump();
  };
  while (next_rank < total) {
    const std::uint64_t hi = std::min(total, next_rank + chunk);
    moca::nonlinear::SearchOptions so;
    so.nonlinear_only = nonlinear_only;
    so.threads = opt.threads;
    so.first_rank = next_rank;
    so.last_rank = hi;
    auto part = moca::nonlinear::search_orthogonal(d, so);
    results.insert(results.end(), part.begin(), part.end());
    next_rank = hi;
    save_checkpoint(next_rank);
  }
  if (dedup_unordered) {
    std::vector<moca::nonlinear::SearchResult> unordered;
    for (const auto& r : results) {
      bool keep = r.wolfram_f <= r.wolfram_g;
      if (!keep) {
        // keep the swapped twin instead; it appears elsewhere in the list
        continue;
      }
      unordered.push_back(r);
    }
    results = std::move(unordered);
  }
  if (opt.json) {
    json out = json::array();
    for (const auto& r : results) {
      out.push_back(json{{"f", r.wolfram_f},
                         {"g", r.wolfram_g},
                         {"nl_f", r.nonlinearity_f},
                         {"nl_g", r.nonlinearity_g},
                         {"cert", format_hex64(r.certificate)}});
    }
    emit_json(opt, json{{"d", d},
                        {"nonlinear_only", nonlinear_only},
                        {"searched", total},
                        {"found", results.size()},
                        {"results", out}});
  } else {
    std::ostringstream text;
    for (const auto& r : results) {
      text << r.wolfram_f << ' ' << r.wolfram_g << ' ' << r.nonlinearity_f << ' '
           << r.nonlinearity_g << ' ' << format_hex64(r.certificate) << '\n';
    }
    emit(opt, text.str());
  }
  return 0;
}

int run_sss_deal(const GlobalOptions& opt, const std::string& family_path, std::uint64_t secret,
                 std::optional<std::uint64_t> randomness) {
  const auto rules = load_family_rules(family_path);
  const moca::designs::BlockIndexCodec codec(rules.front().field(),
                                             rules.front().diameter() - 1);
  if (secret < 1 || secret > codec.size()) {
    throw ValidationError("secret must lie in 1..N (1-based display convention)");
  }
  std::uint64_t r0;
  if (randomness) {
    if (*randomness < 1 || *randomness > codec.size()) {
      throw ValidationError("randomness must lie in 1..N");
    }
    r0 = *randomness - 1;
  } else {
    // Raw draw reduced mod N: implementation-defined distributions would break
    // byte-identical transcripts across platforms.
    std::mt19937_64 rng(opt.seed);
    r0 = rng() % codec.size();
  }
  const auto shares = moca::sss::deal(secret - 1, r0, rules);
  json out{{"secret", secret},
           {"randomness", r0 + 1},
           {"shares", moca::serial::shares_to_json(shares)}};
  if (opt.json) {
    emit_json(opt, out);
  } else {
    std::ostringstream text;
    text << "randomness: " << r0 + 1 << "\n";
    for (const auto& s : shares) text << "player " << s.player << ": " << s.value + 1 << "\n";
    emit(opt, text.str());
  }
  return 0;
}

int run_sss_reconstruct(const GlobalOptions& opt, const std::string& family_path,
                        const std::vector<std::string>& share_args, const std::string& method) {
  if (share_args.size() != 2) throw ValidationError("reconstruction needs exactly two shares");
  const auto rules = load_family_rules(family_path);
  moca::sss::Share shares[2];
  for (int i = 0; i < 2; ++i) {
    const auto parts = split(share_args[static_cast<std::size_t>(i)], ':');
    if (parts.size() != 2) throw ValidationError("share format is player:value, e.g. 1:4");
    const std::uint64_t value = parse_u64(parts[1], "share value");
    if (value < 1) throw ValidationError("share values are 1-based");
    shares[i] = {static_cast<unsigned>(parse_u64(parts[0], "player")), value - 1};
  }
  std::uint64_t secret;
  if (method == "sylvester") {
    secret = moca::sss::reconstruct_linear(shares[0], shares[1], rules);
  } else if (method == "coupled") {
    secret = moca::sss::reconstruct_coupled(shares[0], shares[1], rules);
  } else if (method == "auto") {
    secret = moca::sss::reconstruct(shares[0], shares[1], rules);
  } else if (method == "both") {
    secret = moca::sss::reconstruct_linear(shares[0], shares[1], rules);
    if (secret != moca::sss::reconstruct_coupled(shares[0], shares[1], rules)) {
      throw ValidationError("sylvester and coupled paths disagree");
    }
  } else {
    throw ValidationError("unknown method: " + method);
  }
  if (opt.json) {
    emit_json(opt, json{{"secret", secret + 1}});
  } else {
    emit(opt, std::to_string(secret + 1) + "\n");
  }
  return 0;
}

int run_sss_audit(const GlobalOptions& opt, const std::string& family_path,
                  std::optional<unsigned> player) {
  const auto rules = load_family_rules(family_path);
  std::vector<unsigned> players;
  if (player) {
    players.push_back(*player);
  } else {
    for (unsigned p = 1; p <= rules.size(); ++p) players.push_back(p);
  }
  json out = json::array();
  bool all_uniform = true;
  for (unsigned p : players) {
    const auto table = moca::sss::secrecy_audit(rules, p);
    const bool uniform = moca::sss::audit_uniform(table);
    all_uniform = all_uniform && uniform;
    out.push_back(json{{"player", p}, {"uniform", uniform}});
  }
  if (opt.json) {
    emit_json(opt, json{{"players", out}, {"perfect", all_uniform}});
  } else {
    std::ostringstream text;
    for (const json& row : out) {
      text << "player " << row["player"] << ": "
           << (row["uniform"].get<bool>() ? "uniform" : "NON-UNIFORM") << "\n";
    }
    text << (all_uniform ? "perfect secrecy: true" : "perfect secrecy: FALSE") << "\n";
    emit(opt, text.str());
  }
  return all_uniform ? 0 : 2;
}

int run_prng_stream(const GlobalOptions& opt, const std::string& pair_path,
                    const std::string& seed_hex, std::uint64_t bits) {
  auto [f, g] = load_pair(pair_path);
  const moca::prng::OcaPair pair(std::move(f), std::move(g));
  const std::size_t half = pair.diameter() - 1;
  const std::size_t blocks = static_cast<std::size_t>((bits + half - 1) / half);
  if (pair.field().q() != 2) {
    // non-binary pairs stream symbols: the seed is a digit string
    const auto seed = moca::ca::parse_cells(seed_hex, pair.field());
    auto stream = moca::prng::keystream(pair, seed, blocks);
    stream.resize(bits);
    const std::string digits = moca::ca::format_cells(stream);
    if (opt.json) {
      emit_json(opt, json{{"symbols", bits}, {"stream", digits}});
    } else {
      emit(opt, digits + "\n");
    }
    return 0;
  }
  const auto seed = bits_of_hex(seed_hex, pair.state_width());
  auto stream = moca::prng::keystream(pair, seed, blocks);
  stream.resize(bits);
  const std::string hex = hex_of_bits(stream);
  if (opt.json) {
    emit_json(opt, json{{"bits", bits}, {"hex", hex}});
  } else {
    emit(opt, hex + "\n");
  }
  return 0;
}

int run_prng_cycles(const GlobalOptions& opt, const std::string& pair_path) {
  auto [f, g] = load_pair(pair_path);
  const moca::prng::OcaPair pair(std::move(f), std::move(g));
  const auto cycles = moca::prng::cycle_structure(pair);
  std::uint64_t states = 0;
  json rows = json::array();
  for (const auto& [length, count] : cycles) {
    rows.push_back(json{{"length", length}, {"count", count}});
    states += length * count;
  }
  const json out{{"q", pair.field().q()},
                 {"d", pair.diameter()},
                 {"states", states},
                 {"cycles", rows}};
  if (opt.json) {
    emit_json(opt, out);
  } else {
    std::ostringstream text;
    for (const auto& [length, count] : cycles) {
      text << "length " << length << " x " << count << "\n";
    }
    text << "states: " << states << "\n";
    emit(opt, text.str());
  }
  return 0;
}

int run_prng_report(const GlobalOptions& opt, const std::string& pair_path) {
  auto [f, g] = load_pair(pair_path);
  const moca::prng::OcaPair pair(std::move(f), std::move(g));
  const auto report = moca::prng::max_period_report(pair);
  const json out{{"order", report.order},
                 {"min_poly", moca::serial::poly_to_json(report.min_poly)},
                 {"min_poly_primitive", report.min_poly_primitive},
                 {"min_poly_full_degree", report.min_poly_full_degree},
                 {"achieves_max", report.achieves_max}};
  if (opt.json) {
    emit_json(opt, out);
  } else {
    std::ostringstream text;
    text << "order: " << report.order << "\n"
         << "min_poly: " << moca::serial::poly_to_json(report.min_poly).dump() << "\n"
         << "primitive: " << (report.min_poly_primitive ? "true" : "false")
         << " (full degree: " << (report.min_poly_full_degree ? "true" : "false") << ")\n"
         << "achieves_max: " << (report.achieves_max ? "true" : "false") << "\n";
    emit(opt, text.str());
  }
  return 0;
}

int run_bent(const GlobalOptions& opt, const std::string& family_path) {
  const moca::linear::MocaFamily family =
      moca::serial::family_from_json(read_json_file(family_path));
  const auto f = moca::boolfun::bent_from_family(family);
  const bool bent = moca::boolfun::is_bent(f);
  const std::uint64_t nl = moca::boolfun::nonlinearity(f);
  const json out{{"n", f.n},
                 {"weight", moca::boolfun::support(f).size()},
                 {"nonlinearity", nl},
                 {"bent", bent},
                 {"spectrum", moca::boolfun::walsh_transform(f)},
                 {"table_hex", moca::boolfun::table_to_hex(f)}};
  if (opt.json) {
    emit_json(opt, out);
  } else {
    std::ostringstream text;
    text << "n: " << f.n << "\nweight: " << moca::boolfun::support(f).size()
         << "\nnonlinearity: " << nl << "\nbent: " << (bent ? "true" : "false")
         << "\ntable_hex: " << moca::boolfun::table_to_hex(f) << "\n";
    emit(opt, text.str());
  }
  return bent ? 0 : 2;
}

int run_ci(const GlobalOptions& opt, const std::string& family_path, bool entries_only,
           unsigned t_max) {
  const auto rules = load_family_rules(family_path);
  const auto f = moca::boolfun::ci_function_from_family(rules, !entries_only);
  const std::size_t weight = moca::boolfun::support(f).size();
  const unsigned order = moca::boolfun::ci_order(f, t_max ? t_max : f.n);
  json out{{"n", f.n},
           {"weight", weight},
           {"ci_order", order},
           {"coordinates_included", !entries_only},
           {"table_hex", moca::boolfun::table_to_hex(f)}};
  if (weight == 0) out["vacuous"] = true;
  if (opt.json) {
    emit_json(opt, out);
  } else {
    std::ostringstream text;
    text << "n: " << f.n << "\nweight: " << weight << "\nci_order: " << order << "\n";
    if (weight == 0) text << "vacuous: true\n";
    if (f.n <= 16) text << "table_hex: " << moca::boolfun::table_to_hex(f) << "\n";
    emit(opt, text.str());
  }
  return 0;
}

int run_oa_strength(const GlobalOptions& opt, const std::string& family_path,
                    const std::string& in_path, bool binary, unsigned t_max) {
  moca::designs::SymbolMatrix matrix;
  if (!family_path.empty()) {
    const auto rules = load_family_rules(family_path);
    std::vector<moca::designs::LatinSquare> squares;
    for (const auto& rule : rules) squares.push_back(moca::designs::cayley_table(rule));
    matrix = moca::designs::mols_to_oa(squares).matrix;
  } else if (!in_path.empty()) {
    matrix = moca::serial::symbol_matrix_from_json(read_json_file(in_path));
  } else {
    throw ValidationError("oa-strength needs --family or --in");
  }
  if (binary) matrix = moca::designs::binary_expand(matrix);
  const unsigned strength =
      moca::designs::oa_strength(matrix, t_max ? t_max : static_cast<unsigned>(matrix.cols));
  if (opt.json) {
    emit_json(opt, json{{"rows", matrix.rows},
                        {"columns", matrix.cols},
                        {"symbols", matrix.symbols},
                        {"strength", strength}});
  } else {
    emit(opt, std::to_string(strength) + "\n");
  }
  return 0;
}

}  // namespace mocakit
