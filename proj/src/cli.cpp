#include "pq/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pq/enumeration.hpp"
#include "pq/error.hpp"
#include "pq/idempotent.hpp"
#include "pq/jsl_map.hpp"
#include "pq/path.hpp"
#include "pq/quantale.hpp"
#include "pq/verify.hpp"

namespace pq::cli {

namespace {

using ojson = nlohmann::ordered_json;

// Listing idempotents materialises f(2n+1) paths.
constexpr std::size_t kListLimit = 15;

nlohmann::json big(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
    return v.convert_to<std::uint64_t>();
  }
  return v.str();
}

ojson turns_json(const std::vector<Turn>& ts) {
  ojson a = ojson::array();
  for (const auto& t : ts) a.push_back({t.a, t.b});
  return a;
}

// Key-value lines in text mode, one JSON object otherwise.
void emit(const ojson& doc, bool json, std::ostream& out) {
  if (json) {
    out << doc.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    out << key << ' ';
    if (value.is_string()) {
      out << value.get<std::string>();
    } else if (value.is_null()) {
      out << '-';
    } else {
      out << value.dump();
    }
    out << '\n';
  }
}

void emit_word(const Path& w, bool json, std::ostream& out) {
  if (json) {
    out << ojson{{"word", w.str()}}.dump() << '\n';
  } else {
    out << w.str() << '\n';
  }
}

void emit_report(const CountReport& r, bool json, std::ostream& out) {
  if (json) {
    out << r.to_json().dump() << '\n';
    return;
  }
  out << to_string(r.family);
  for (auto p : r.params) out << ' ' << p;
  out << "\nformula " << r.formula.str() << "\noracle "
      << (r.oracle ? r.oracle->str() : "-");
  if (r.cross_oracle) out << "\ncross_oracle " << r.cross_oracle->str();
  out << "\nagree " << (r.agree() ? "true" : "false") << '\n';
}

ojson check_doc(const Path& w) {
  ojson d;
  const bool square = w.is_square();
  d["n"] = w.n();
  d["m"] = w.m();
  d["idempotent"] = square ? ojson(is_idempotent_path(w)) : ojson();
  d["upper_zigzag"] = square ? ojson(is_upper_zigzag(w)) : ojson();
  d["nilpotent"] = square ? ojson(is_nilpotent_path(w)) : ojson();
  d["descents"] = descent_count(w);
  const auto f = path_to_map(w);
  d["map"] = f.str();
  d["aperiodicity"] = square ? ojson(aperiodicity_index(f)) : ojson();
  d["ne_turns"] = turns_json(ne_turns(w));
  d["en_turns"] = turns_json(en_turns(w));
  return d;
}

struct Args {
  bool json = false;
  std::vector<std::string> words;
  std::vector<std::size_t> nums;
  std::string family;
  std::string side;
  bool traced = false;
  bool list = false;
  bool count = false;
  bool zigzag = false;
  std::optional<std::size_t> m;
  std::size_t verify_n = 5;
  std::optional<std::size_t> oracle_cap;
};

CountReport dispatch_count(const std::string& family,
                           const std::vector<std::size_t>& p,
                           const OracleCaps& caps) {
  struct Entry {
    std::size_t arity;
    std::function<CountReport(const std::vector<std::size_t>&)> fn;
  };
  const std::map<std::string, Entry> table = {
      {"idempotents", {1, [&](auto& a) { return count_idempotents(a[0], caps); }}},
      {"monotone-idempotents",
       {1, [&](auto& a) { return count_monotone_idempotents(a[0], caps); }}},
      {"idempotents-by-top",
       {2, [&](auto& a) { return count_idempotents_by_top(a[0], a[1], caps); }}},
      {"nilpotents", {1, [&](auto& a) { return count_nilpotents(a[0], caps); }}},
      {"descents",
       {3, [&](auto& a) { return count_by_descents(a[0], a[1], a[2], caps); }}},
      {"image-size",
       {2, [&](auto& a) { return count_by_image_size(a[0], a[1], caps); }}},
      {"max-image",
       {2, [&](auto& a) { return count_by_max_image(a[0], a[1], caps); }}},
  };
  const auto it = table.find(family);
  if (it == table.end()) throw CLI::ValidationError("unknown family: " + family);
  if (p.size() != it->second.arity) {
    throw CLI::ValidationError(family + " takes " +
                               std::to_string(it->second.arity) + " parameter(s)");
  }
  return it->second.fn(p);
}

int execute(const std::string& verb, const Args& a, std::ostream& out) {
  auto path_at = [&](std::size_t i) { return parse_path(a.words.at(i)); };

  if (verb == "product") {
    const auto w = path_at(0), u = path_at(1);
    if (!a.traced) {
      emit_word(product(w, u), a.json, out);
    } else if (a.json) {
      const auto t = product_traced(w, u);
      out << ojson{{"word", t.word.str()}, {"bars", t.bars}, {"traced", t.str()}}.dump()
          << '\n';
    } else {
      out << product_traced(w, u).str() << '\n';
    }
  } else if (verb == "oplus") {
    emit_word(oplus(path_at(0), path_at(1)), a.json, out);
  } else if (verb == "check") {
    emit(check_doc(path_at(0)), a.json, out);
  } else if (verb == "map") {
    const auto f = path_to_map(path_at(0));
    if (a.json) {
      out << ojson{{"values", f.values()}, {"codomain", f.codomain()}}.dump() << '\n';
    } else {
      out << f.str() << '\n';
    }
  } else if (verb == "path") {
    emit_word(map_to_path(JoinContMap::parse(a.words.at(0))), a.json, out);
  } else if (verb == "idempotents") {
    const std::size_t n = a.nums.at(0);
    if (a.count) {
      const BigInt c = fibonacci(2 * n + 1);
      if (a.json) {
        out << ojson{{"n", n}, {"count", big(c)}}.dump() << '\n';
      } else {
        out << c.str() << '\n';
      }
    } else {
      if (n > kListLimit) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "listing is limited to n <= " + std::to_string(kListLimit) +
                        "; use --count");
      }
      auto ws = enumerate_idempotents(n);
      std::sort(ws.begin(), ws.end());
      if (a.json) {
        ojson arr = ojson::array();
        for (const auto& w : ws) arr.push_back(w.str());
        out << ojson{{"n", n}, {"paths", arr}}.dump() << '\n';
      } else {
        for (const auto& w : ws) out << w.str() << '\n';
      }
    }
  } else if (verb == "emmentaler") {
    const auto e = emmentaler_from_map(path_to_map(path_at(0)));
    if (a.json) {
      out << ojson{{"emmentaler", e.str()}, {"zigzag", encode_word(e).str()}}.dump()
          << '\n';
    } else {
      out << (a.zigzag ? encode_word(e).str() : e.str()) << '\n';
    }
  } else if (verb == "from-emmentaler") {
    const auto e = a.zigzag ? decode_word(ZigzagWord::parse(a.words.at(0)))
                            : Emmentaler::parse(a.words.at(0));
    const auto [f, g] = map_from_emmentaler(e);
    ojson d;
    d["path"] = map_to_path(f).str();
    d["emmentaler"] = e.str();
    d["zigzag"] = encode_word(e).str();
    d["f"] = f.str();
    d["g"] = g.str();
    emit(d, a.json, out);
  } else if (verb == "count") {
    OracleCaps caps;
    if (a.oracle_cap) caps.enumeration = *a.oracle_cap;
    caps.pairwise = std::min(caps.pairwise, caps.enumeration);
    emit_report(dispatch_count(a.family, a.nums, caps), a.json, out);
  } else if (verb == "identity") {
    if (a.nums.size() == 1) {
      emit_report(verify_identity_square(a.nums[0]), a.json, out);
    } else if (a.nums.size() == 3) {
      emit_report(verify_identity_rect(a.nums[0], a.nums[1], a.nums[2]), a.json, out);
    } else {
      throw CLI::ValidationError("identity takes n or n m k");
    }
  } else if (verb == "factor") {
    const auto w = path_at(0);
    if (a.m) {
      const auto c = preimage_count(w, *a.m);
      if (a.json) {
        out << ojson{{"word", w.str()}, {"m", *a.m}, {"preimages", big(c)}}.dump() << '\n';
      } else {
        out << c.str() << '\n';
      }
    } else {
      const auto fz = factorize(w);
      ojson d;
      d["left"] = fz.left.str();
      d["right"] = fz.right.str();
      d["d"] = fz.d;
      emit(d, a.json, out);
    }
  } else if (verb == "residual") {
    const auto p = path_at(0), q = path_at(1);
    emit_word(a.side == "right" ? residual_right(p, q) : residual_left(p, q),
              a.json, out);
  } else if (verb == "render") {
    const auto w = path_at(0);
    if (a.json) {
      out << ojson{{"word", w.str()}, {"ascii", render_ascii(w)}}.dump() << '\n';
    } else {
      out << render_ascii(w);
    }
  } else if (verb == "verify") {
    VerifyOptions opts;
    opts.n = a.verify_n;
    if (a.oracle_cap) opts.caps.enumeration = *a.oracle_cap;
    opts.caps.pairwise = std::min(opts.caps.pairwise, opts.caps.enumeration);
    const auto results = run_verification(opts);
    const auto passed = static_cast<std::size_t>(std::count_if(
        results.begin(), results.end(), [](const auto& r) { return r.passed; }));
    if (a.json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : results) arr.push_back(r.to_json());
      out << nlohmann::json{{"n", opts.n}, {"passed", passed == results.size()},
                            {"checks", arr}}.dump()
          << '\n';
    } else {
      for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.id << ' ' << r.title << " ["
            << r.detail << "]\n";
      }
      out << passed << '/' << results.size() << " checks passed\n";
    }
    return passed == results.size() ? kOk : kDomainError;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact algebra and counting on lattice paths.", "pq"};
  app.require_subcommand(1);
  Args a;

  auto sub = [&](const std::string& name, const std::string& desc) {
    auto* s = app.add_subcommand(name, desc);
    s->add_flag("--json", a.json, "Write one JSON document");
    return s;
  };
  auto two_words = [&](CLI::App* s, const std::string& what) {
    s->add_option("words", a.words, what)->required()->expected(2);
  };
  auto one_word = [&](CLI::App* s, const std::string& what) {
    s->add_option("word", a.words, what)->required()->expected(1);
  };

  auto* product_cmd = sub("product", "Product w (x) u of w in P(n,m), u in P(m,k)");
  two_words(product_cmd, "w u");
  product_cmd->add_flag("--traced", a.traced, "Mark block boundaries with bars");
  two_words(sub("oplus", "Dual product w (+) u"), "w u");
  one_word(sub("check", "Properties of a path"), "path word");
  one_word(sub("map", "Join-continuous map of a path"), "path word");
  one_word(sub("path", "Path of a map given as 'v0,...,vn/m'"), "map");

  auto* idem_cmd = sub("idempotents", "Idempotent paths in P(n,n)");
  idem_cmd->add_option("n", a.nums, "size")->required()->expected(1);
  auto* list_flag = idem_cmd->add_flag("--list", a.list, "List paths (default)");
  idem_cmd->add_flag("--count", a.count, "Print the count only")->excludes(list_flag);

  auto* emm_cmd = sub("emmentaler", "Emmentaler of an idempotent path");
  one_word(emm_cmd, "idempotent path");
  emm_cmd->add_flag("--zigzag", a.zigzag, "Print the zigzag word instead");

  auto* from_cmd = sub("from-emmentaler", "Idempotent from 'y0-x0;y1-x1;...'");
  one_word(from_cmd, "emmentaler");
  from_cmd->add_flag("--zigzag", a.zigzag, "Read a zigzag word over {1,m,0}");

  auto* count_cmd = sub("count", "Formula count with exhaustive oracle");
  count_cmd->add_option("family", a.family,
                        "idempotents | monotone-idempotents | idempotents-by-top | "
                        "nilpotents | descents | image-size | max-image")
      ->required();
  count_cmd->add_option("params", a.nums, "family parameters")->required();
  count_cmd->add_option("--oracle-cap", a.oracle_cap, "Largest n for the oracle");

  sub("identity", "Binomial identity for P(n,m), P(m,k); n alone for the square form")
      ->add_option("params", a.nums, "n [m k]")
      ->required();

  auto* factor_cmd = sub("factor", "Epi-mono factorization of a path");
  one_word(factor_cmd, "path word");
  factor_cmd->add_option("--m", a.m, "Count pairs (a,b) in P(n,m) x P(m,k) with a (x) b = w");

  auto* res_cmd = sub("residual", "right H F: largest r with r (x) F <= H; left F H: largest r with F (x) r <= H");
  res_cmd->add_option("side", a.side, "right | left")
      ->required()
      ->check(CLI::IsMember({"right", "left"}));
  two_words(res_cmd, "operands");

  one_word(sub("render", "ASCII drawing of a path"), "path word");

  auto* verify_cmd = sub("verify", "Run the oracle suite");
  verify_cmd->add_option("--n", a.verify_n, "Size bound for the property checks");
  verify_cmd->add_option("--oracle-cap", a.oracle_cap, "Largest n for enumeration oracles");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    const auto chosen = app.get_subcommands();
    return execute(chosen.front()->get_name(), a, out);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::Error& e) {
    app.exit(e, out, err);
    return kUsageError;
  } catch (const IllegalCharacterError& e) {
    err << "pq: " << e.what() << '\n';
    return kDomainError;
  } catch (const Error& e) {
    err << "pq: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "pq: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace pq::cli
