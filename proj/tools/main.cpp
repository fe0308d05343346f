// gl2: verify, convert, fill and generate documents; enumerate nerves.
// Exit status: 0 success, 1 semantic violation, 2 usage, parse or I/O error.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gl2/io.hpp"
#include "gl2/lax.hpp"
#include "gl2/random.hpp"
#include "gl2/ruth.hpp"

using namespace gl2;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kParse = 2;

struct Output {
  std::string path;

  void write(const std::string& kind, const Json& payload) const {
    const std::string text = render_document(kind, payload);
    if (path.empty())
      std::cout << text;
    else
      write_text_file(path, text);
  }
};

int report_result(const Report& r, const std::string& kind) {
  if (r.empty()) {
    std::cout << "ok: " << kind << "\n";
    return kOk;
  }
  for (const auto& v : r) std::cout << v.message() << "\n";
  return kViolation;
}

Document load(const std::string& path, const std::string& expected_kind = "") {
  Document d = parse_document(read_text_file(path));
  if (!expected_kind.empty() && d.kind != expected_kind)
    throw ParseError("expected a " + expected_kind + " document, found " + d.kind);
  return d;
}

Report verify_simplex_payload(const Json& j, bool horn) {
  if (!j.is_object() || !j.contains("handle")) throw ParseError("simplex: missing field \"handle\"");
  const std::string handle = j.at("handle").get<std::string>();
  if (horn && !j.contains("k")) throw ParseError("horn: missing field \"k\"");
  const std::size_t k = horn ? j.at("k").get<std::size_t>() : 0;
  if (handle == "gl") {
    auto s = gl_simplex_from_json(j);
    if (!horn) return validate_simplex(GLHandle{}, s);
    return validate_horn(GLHandle{}, Horn<GLHandle>{s.n, k, s});
  }
  if (handle == "table") {
    const TwoCategoryDoc c = twocat_from_json(j.at("category"));
    if (auto r = verify_2category(c.cat); !r.empty()) return r;
    const TableHandle h(c.cat);
    auto s = table_simplex_from_json(j, c.cat);
    if (!horn) return validate_simplex(h, s);
    return validate_horn(h, Horn<TableHandle>{s.n, k, s});
  }
  throw ParseError("simplex: handle must be \"gl\" or \"table\"");
}

int cmd_verify(const std::string& path, const std::string& kind) {
  const Document d = load(path, kind);
  const Json& p = d.payload;
  if (d.kind == "groupoid") return report_result(verify_groupoid(groupoid_from_json(p)), d.kind);
  if (d.kind == "bundle") {
    bundle_from_json(p);
    return report_result({}, d.kind);
  }
  if (d.kind == "ruth") return report_result(verify_ruth(ruth_from_json(p)), d.kind);
  if (d.kind == "functor") return report_result(verify_pseudofunctor(functor_from_json(p)), d.kind);
  if (d.kind == "pseudo-rep") return report_result(verify_pseudo_rep(pseudo_rep_from_json(p)), d.kind);
  if (d.kind == "morphism") return report_result(verify_morphism(morphism_from_json(p)), d.kind);
  if (d.kind == "transformation") return report_result(verify_lax_equivalence(transformation_from_json(p)), d.kind);
  if (d.kind == "two-category") {
    const TwoCategoryDoc c = twocat_from_json(p);
    if (!c.groupoid) return report_result(verify_2category(c.cat), d.kind);
    return report_result(verify_2groupoid(Fin2Groupoid::from_category(c.cat)).violations, d.kind);
  }
  if (d.kind == "simplex") return report_result(verify_simplex_payload(p, false), d.kind);
  if (d.kind == "horn") return report_result(verify_simplex_payload(p, true), d.kind);
  throw ParseError("unknown document kind \"" + d.kind + "\"");
}

int cmd_convert(const std::string& direction, const std::string& path, const Output& out) {
  if (direction == "ruth-to-functor") {
    out.write("functor", functor_to_json(ruth_to_pseudofunctor(ruth_from_json(load(path, "ruth").payload))));
  } else if (direction == "functor-to-ruth") {
    out.write("ruth", ruth_to_json(pseudofunctor_to_ruth(functor_from_json(load(path, "functor").payload))));
  } else if (direction == "morphism-to-lax") {
    out.write("transformation",
              transformation_to_json(morphism_to_lax_equivalence(morphism_from_json(load(path, "morphism").payload))));
  } else if (direction == "lax-to-morphism") {
    out.write("morphism",
              morphism_to_json(lax_equivalence_to_morphism(transformation_from_json(load(path, "transformation").payload))));
  } else {
    throw ParseError("unknown conversion \"" + direction + "\"");
  }
  return kOk;
}

int cmd_fill(const std::string& path, const std::string& handle, const Output& out) {
  const Json j = load(path, "horn").payload;
  if (!j.is_object() || !j.contains("handle") || !j.contains("k")) throw ParseError("horn: needs \"handle\" and \"k\"");
  const std::string h = j.at("handle").get<std::string>();
  if (!handle.empty() && handle != h) throw ParseError("horn handle is \"" + h + "\", not \"" + handle + "\"");
  const std::size_t k = j.at("k").get<std::size_t>();
  if (h == "gl") {
    auto s = gl_simplex_from_json(j);
    out.write("simplex", gl_simplex_to_json(fill_horn(GLHandle{}, Horn<GLHandle>{s.n, k, s})));
    return kOk;
  }
  if (h == "table") {
    const TwoCategoryDoc c = twocat_from_json(j.at("category"));
    if (auto r = verify_2category(c.cat); !r.empty()) return report_result(r, "two-category");
    const TableHandle th(c.cat);
    auto s = table_simplex_from_json(j, c.cat);
    out.write("simplex", table_simplex_to_json(c.cat, fill_horn(th, Horn<TableHandle>{s.n, k, s})));
    return kOk;
  }
  throw ParseError("horn: handle must be \"gl\" or \"table\"");
}

std::vector<std::vector<Rational>> parse_lines(const std::string& text) {
  std::vector<std::vector<Rational>> lines;
  std::stringstream all(text);
  std::string line;
  while (std::getline(all, line, ';')) {
    std::vector<Rational> v;
    std::stringstream ls(line);
    std::string entry;
    while (std::getline(ls, entry, ',')) v.push_back(parse_rational(entry));
    lines.push_back(std::move(v));
  }
  return lines;
}

int cmd_generate(const std::string& example, std::size_t n, const std::string& group, const std::string& lines,
                 const Output& out) {
  if (example == "pair") {
    if (n == 0) throw InvalidInput("pair groupoid needs --n >= 1");
    out.write("groupoid", groupoid_to_json(pair_groupoid(n)));
  } else if (example == "action") {
    out.write("groupoid", groupoid_to_json(translation_groupoid(group_by_name(group))));
  } else if (example == "delooping") {
    out.write("two-category", twocat_to_json(TwoCategoryDoc{delooping(group_by_name(group)).cat, true}));
  } else if (example == "lines-projection") {
    out.write("pseudo-rep", pseudo_rep_to_json(lines_projection_pseudo_rep(parse_lines(lines))));
  } else if (example == "doubling") {
    out.write("ruth", ruth_to_json(double_pseudo_rep(lines_projection_pseudo_rep(parse_lines(lines)))));
  } else {
    throw ParseError("unknown example \"" + example + "\"");
  }
  return kOk;
}

int cmd_nerve(const std::string& path, std::size_t level) {
  const TwoCategoryDoc c = twocat_from_json(load(path, "two-category").payload);
  if (auto r = verify_2category(c.cat); !r.empty()) return report_result(r, "two-category");
  const TableHandle h(c.cat);
  int status = kOk;
  for (std::size_t n = 0; n <= level; ++n) {
    const auto simplices = enumerate_nerve(h, n);
    std::size_t invalid = 0, refill_mismatch = 0;
    for (const auto& s : simplices) {
      if (!validate_simplex(h, s).empty()) ++invalid;
      if (n >= 4)
        for (std::size_t k = 0; k <= n; ++k)
          if (!(fill_horn(h, horn_of(s, k)) == s)) ++refill_mismatch;
    }
    std::cout << "level " << n << ": " << simplices.size() << " simplices";
    if (invalid) std::cout << ", " << invalid << " invalid";
    if (n >= 4) std::cout << ", horn fillers " << (refill_mismatch ? "not unique" : "unique");
    std::cout << "\n";
    if (invalid || refill_mismatch) status = kViolation;
  }
  return status;
}

// A short randomized run of the central properties.
int cmd_selftest(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const Fiber2 src = random_fiber(rng, std::size_t(rng.uniform(0, 3)), std::size_t(rng.uniform(0, 3)), 2);
    const Fiber2 dst = random_fiber(rng, std::size_t(rng.uniform(0, 3)), std::size_t(rng.uniform(0, 3)), 2);
    const ChainMap2 m = random_chain_map(rng, src, dst);
    if (is_quasi_iso(m) != is_cone_exact(m)) ++failures;
  }
  const FinGroupoid g = pair_groupoid(3);
  for (std::size_t i = 0; i < count; ++i) {
    const Ruth2 r = random_ruth(rng, g, 2);
    if (!verify_ruth(r).empty() || !(pseudofunctor_to_ruth(ruth_to_pseudofunctor(r)) == r)) ++failures;
  }
  for (std::size_t i = 0; i < count; ++i)
    if (auto s = random_gl_simplex(rng, 3, FiberShape{1, 1, 2}); !validate_simplex(GLHandle{}, s).empty()) ++failures;
  std::cout << "selftest seed " << seed << ": " << 3 * count << " checks, " << failures << " failures\n";
  return failures ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact GL(V) 2-groupoid, nerve and representation-up-to-homotopy toolkit"};
  app.require_subcommand(1);
  std::string out_path;

  std::string verify_path, verify_kind;
  auto* verify = app.add_subcommand("verify", "Check every equation of a document");
  verify->add_option("file", verify_path, "Document")->required();
  verify->add_option("--kind", verify_kind, "Required document kind");

  std::string conv_dir, conv_path;
  auto* convert = app.add_subcommand("convert", "Translate between representations and pseudo-functors");
  convert->add_option("direction", conv_dir, "ruth-to-functor | functor-to-ruth | morphism-to-lax | lax-to-morphism")
      ->required();
  convert->add_option("file", conv_path, "Input document")->required();
  convert->add_option("--out", out_path, "Output path (default stdout)");

  std::string fill_path, fill_handle;
  auto* fill = app.add_subcommand("fill", "Fill a horn");
  fill->add_option("file", fill_path, "Horn document")->required();
  fill->add_option("--handle", fill_handle, "gl | table (must match the document)");
  fill->add_option("--out", out_path, "Output path (default stdout)");

  std::string gen_example, gen_group = "Z2", gen_lines = "1,0;1,1;2,1";
  std::size_t gen_n = 3;
  auto* generate = app.add_subcommand("generate", "Write an example document");
  generate->add_option("example", gen_example, "pair | action | delooping | lines-projection | doubling")->required();
  generate->add_option("--n", gen_n, "Number of points (pair)");
  generate->add_option("--group", gen_group, "Group name, e.g. Z3, S3 (action, delooping)");
  generate->add_option("--lines", gen_lines, "Vectors such as \"1,0;1,1\" (lines-projection, doubling)");
  generate->add_option("--out", out_path, "Output path (default stdout)");

  std::string nerve_path;
  std::size_t nerve_level = 3;
  auto* nerve = app.add_subcommand("nerve", "Enumerate and validate the nerve of a two-category document");
  nerve->add_option("file", nerve_path, "Two-category document")->required();
  nerve->add_option("--level", nerve_level, "Highest level");

  std::uint64_t seed = 1;
  std::size_t count = 50;
  auto* selftest = app.add_subcommand("selftest", "Randomized self-test");
  selftest->add_option("--seed", seed, "Random seed");
  selftest->add_option("--count", count, "Samples per property");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  const Output out{out_path};
  try {
    if (*verify) return cmd_verify(verify_path, verify_kind);
    if (*convert) return cmd_convert(conv_dir, conv_path, out);
    if (*fill) return cmd_fill(fill_path, fill_handle, out);
    if (*generate) return cmd_generate(gen_example, gen_n, gen_group, gen_lines, out);
    if (*nerve) return cmd_nerve(nerve_path, nerve_level);
    if (*selftest) return cmd_selftest(seed, count);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  }
  return kParse;
}
