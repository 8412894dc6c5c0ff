#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "modclass/approximation.hpp"
#include "modclass/classification.hpp"
#include "modclass/errors.hpp"
#include "modclass/injectivity.hpp"
#include "modclass/lattice.hpp"
#include "modclass/limits.hpp"
#include "module_spec.hpp"

namespace modclass::cli {

namespace {

using Json = nlohmann::json;
using Row = std::vector<std::string>;

struct Config {
  std::string ring;
  std::string format = "table";
  std::string output;
  std::string module;
  std::string cls = "C1";
  std::string suite;
  std::size_t bound = 64;
  std::size_t generators = 2;
  std::size_t max_module = 0;
  std::size_t max_lattice = 0;
  std::size_t max_hom = 0;
};

struct Outcome {
  Json result;
  std::string table;
  int code = kPass;
};

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string join_ints(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "[" + s + "]";
}

std::string table(const Row& head, const std::vector<Row>& rows) {
  std::vector<std::size_t> w(head.size());
  for (std::size_t i = 0; i < head.size(); ++i) w[i] = head[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
  std::ostringstream os;
  auto line = [&](const Row& r) {
    for (std::size_t i = 0; i < r.size(); ++i) os << std::left << std::setw(static_cast<int>(w[i]) + 2) << r[i];
    os << "\n";
  };
  line(head);
  for (const auto& r : rows) line(r);
  return os.str();
}

Json module_json(const ModulePtr& m) {
  return {{"size", m->size()}, {"invariants", m->group().invariants()}, {"length", composition_length(*m)}};
}

Outcome list_modules(const std::vector<ModulePtr>& ms) {
  Outcome o;
  o.result = Json::array();
  std::vector<Row> rows;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const bool inj = is_injective(ms[i]);
    Json j = module_json(ms[i]);
    j["index"] = i;
    j["injective"] = inj;
    o.result.push_back(j);
    rows.push_back({std::to_string(i), std::to_string(ms[i]->size()), join_ints(ms[i]->group().invariants()),
                    std::to_string(composition_length(*ms[i])), yes(inj)});
  }
  o.table = table({"index", "size", "group", "length", "injective"}, rows);
  return o;
}

Outcome cmd_ring(const RingPtr& r) {
  Outcome o;
  const std::size_t rad = jacobson_radical(r).size();
  o.result = {{"size", r->size()},
              {"characteristic", r->characteristic()},
              {"commutative", r->is_commutative()},
              {"semisimple", is_semisimple_ring(*r)},
              {"radical_size", rad},
              {"simple_modules", simple_modules(r).size()},
              {"description", r->spec().describe()}};
  o.table = table({"property", "value"}, {{"ring", r->spec().describe()},
                                          {"size", std::to_string(r->size())},
                                          {"characteristic", std::to_string(r->characteristic())},
                                          {"commutative", yes(r->is_commutative())},
                                          {"semisimple", yes(is_semisimple_ring(*r))},
                                          {"radical size", std::to_string(rad)},
                                          {"simple modules", std::to_string(simple_modules(r).size())}});
  return o;
}

Outcome cmd_classify(const ModulePtr& m) {
  Outcome o;
  const ClassificationReport rep = classify(m);
  o.result = rep.to_json();
  std::vector<Row> rows;
  for (const char* k : {"injective", "C1", "C2", "C3", "C4", "C5", "C6", "uniform"}) {
    rows.push_back({k, yes(o.result["flags"][k].get<bool>())});
  }
  o.table = table({"class", "member"}, rows);
  std::vector<Row> parts;
  for (const auto& s : o.result["summands"]) {
    parts.push_back({std::to_string(s["size"].get<std::uint32_t>()), s["invariants"].dump(),
                     std::to_string(s["length"].get<std::size_t>()), std::to_string(s["multiplicity"].get<std::size_t>())});
  }
  o.table += "\n" + table({"summand size", "group", "length", "multiplicity"}, parts);
  for (const auto& [k, v] : o.result["witnesses"].items()) o.table += "witness " + k + ": " + v.dump() + "\n";
  return o;
}

Outcome cmd_hull(const ModulePtr& m) {
  Outcome o;
  const HullResult h = injective_hull(m);
  o.result = h.to_json();
  o.result["module"] = module_json(m);
  o.result["hull_module"] = module_json(h.hull);
  o.table = table({"property", "value"}, {{"module size", std::to_string(m->size())},
                                          {"hull size", std::to_string(h.hull->size())},
                                          {"hull group", join_ints(h.hull->group().invariants())},
                                          {"method", h.method},
                                          {"injective", yes(h.injective)},
                                          {"essential", yes(h.essential)}});
  return o;
}

Outcome cmd_corpus(const RingPtr& r, const Config& c) {
  Outcome o;
  const Corpus& corpus = module_corpus(r, c.bound, c.generators);
  o.result = corpus.to_json();
  std::vector<Row> pool;
  for (std::size_t i = 0; i < corpus.pool.size(); ++i) {
    const auto& p = corpus.pool[i];
    pool.push_back({std::to_string(i), std::to_string(p->size()), join_ints(p->group().invariants()),
                    std::to_string(composition_length(*p))});
  }
  o.table = "indecomposables\n" + table({"index", "size", "group", "length"}, pool);
  std::vector<Row> rows;
  for (const auto& e : corpus.entries) {
    std::vector<std::uint32_t> m(e.multiplicities.begin(), e.multiplicities.end());
    rows.push_back({std::to_string(e.module->size()), join_ints(m)});
  }
  o.table += "\nmodules (" + std::to_string(corpus.entries.size()) + ")\n" + table({"size", "multiplicities"}, rows);
  return o;
}

Outcome cmd_preenvelope(const ModulePtr& m, const Config& c) {
  if (class_index(c.cls) != 1) throw InvalidSpec("class '" + c.cls + "': only C1 preenvelopes are constructed");
  Outcome o;
  const PreenvelopeCertificate cert = construct_C1_preenvelope(m, c.bound, c.generators);
  o.result = cert.to_json();
  o.code = cert.passes() ? kPass : kFail;
  o.table = table({"property", "value"},
                  {{"source size", std::to_string(m->size())},
                   {"target size", std::to_string(cert.u.cod->size())},
                   {"label", cert.label},
                   {"target in class", yes(cert.target_in_class) + " (" + cert.target_membership + ")"},
                   {"split mono", yes(cert.split_mono)},
                   {"envelope", cert.envelope ? yes(*cert.envelope) : "undecided"},
                   {"targets checked", std::to_string(cert.check.targets_checked)},
                   {"maps checked", std::to_string(cert.check.maps_checked)},
                   {"undecided targets", std::to_string(cert.undecided_targets)},
                   {"passes", yes(cert.passes())}});
  return o;
}

Outcome cmd_suite(const RingPtr& r, const Config& c) {
  Outcome o;
  const SuiteReport s = run_suite(c.suite, r, {c.bound, c.generators});
  o.result = s.to_json();
  o.code = s.pass() ? kPass : kFail;
  std::vector<Row> rows;
  for (const auto& cl : s.claims) rows.push_back({cl.pass ? "PASS" : "FAIL", cl.name});
  o.table = table({"verdict", "claim"}, rows) + "suite " + s.suite + ": " + (s.pass() ? "PASS" : "FAIL") + "\n";
  return o;
}

Outcome cmd_keytrick(const ModulePtr& m) {
  Outcome o;
  const SummandSumWitness w = summand_sum_witness(m);
  o.result = w.to_json();
  o.code = w.passes() ? kPass : kFail;
  o.table = table({"check", "holds"}, {{"A isomorphic to B", yes(w.isomorphic)},
                                       {"A is a summand", yes(w.a_summand)},
                                       {"B is a summand", yes(w.b_summand)},
                                       {"A and B independent", yes(w.independent)},
                                       {"A + B is not a summand", yes(w.sum_not_summand)},
                                       {"passes", yes(w.passes())}});
  return o;
}

Json caps_json() {
  const Limits l = limits();
  return {{"module_size", l.module_size},
          {"lattice_size", l.lattice_size},
          {"hom_size", l.hom_size},
          {"ring_size", l.ring_size},
          {"action_entries", l.action_entries}};
}

void emit(const Config& c, const std::string& command, const RingPtr& r, const Outcome& o, std::ostream& out) {
  std::string text;
  if (c.format == "json") {
    Json j{{"schema", kSchema},
           {"version", kVersion},
           {"command", command},
           {"ring", r->spec().to_json()},
           {"caps", caps_json()},
           {"bound", c.bound},
           {"generator_bound", c.generators},
           {"exit_code", o.code},
           {"result", o.result}};
    if (!c.module.empty()) j["module_spec"] = c.module;
    text = j.dump(2) + "\n";
  } else {
    text = o.table;
  }
  if (c.output.empty()) {
    out << text;
  } else {
    std::ofstream f(c.output);
    if (!f) throw InvalidSpec("output path '" + c.output + "' cannot be written");
    f << text;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Exact computations with finite rings and finite right modules", "modclass"};
  app.set_version_flag("--version", kVersion);
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--ring,-r", c.ring, "ring spec: JSON object or shorthand such as zmod:8, ut2:2, ut2rel:2,2");
  app.add_option("--format,-f", c.format, "output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--output,-o", c.output, "write the report to a file");
  app.add_option("--bound", c.bound, "corpus size bound")->check(CLI::PositiveNumber);
  app.add_option("--generators", c.generators, "corpus generator bound")->check(CLI::NonNegativeNumber);
  app.add_option("--max-module-size", c.max_module, "module size cap")->check(CLI::PositiveNumber);
  app.add_option("--max-lattice-size", c.max_lattice, "submodule lattice cap")->check(CLI::PositiveNumber);
  app.add_option("--max-hom-size", c.max_hom, "hom space enumeration cap")->check(CLI::PositiveNumber);

  auto* ring_cmd = app.add_subcommand("ring", "validate and describe the ring");
  auto* simples_cmd = app.add_subcommand("simples", "list the simple modules");
  auto* inj_cmd = app.add_subcommand("injectives", "list the indecomposable injective modules");
  auto* uni_cmd = app.add_subcommand("uniforms", "list the uniform modules");
  auto* classify_cmd = app.add_subcommand("classify", "decide injectivity and C1 to C6");
  auto* hull_cmd = app.add_subcommand("hull", "compute the injective hull");
  auto* corpus_cmd = app.add_subcommand("corpus", "list direct sums of indecomposables up to the bound");
  auto* pre_cmd = app.add_subcommand("preenvelope", "construct and check a preenvelope");
  auto* suite_cmd = app.add_subcommand("suite", "run a named verification suite");
  auto* kt_cmd = app.add_subcommand("keytrick", "check that N + E(N) has independent summands with non-summand sum");
  for (auto* sc : {classify_cmd, hull_cmd, pre_cmd, kt_cmd}) {
    sc->add_option("--module,-m", c.module, "module spec")->required();
  }
  pre_cmd->add_option("--class", c.cls, "target class");
  std::string names;
  for (const auto& n : suite_names()) names += (names.empty() ? "" : ", ") + n;
  suite_cmd->add_option("name", c.suite, "one of: " + names)->required()->check(CLI::IsMember(suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }
  if (c.ring.empty()) {
    err << "error: --ring is required\n";
    return kUsage;
  }

  ScopedLimits restore(limits());
  try {
    apply_environment_overrides();
    Limits l = limits();
    if (c.max_module) l.module_size = c.max_module;
    if (c.max_lattice) l.lattice_size = c.max_lattice;
    if (c.max_hom) l.hom_size = c.max_hom;
    set_limits(l);

    const RingPtr r = build_ring(RingSpec::parse(c.ring));
    auto module = [&] { return parse_module_spec(r, c.module); };
    Outcome o;
    std::string command;
    if (*ring_cmd) {
      command = "ring";
      o = cmd_ring(r);
    } else if (*simples_cmd) {
      command = "simples";
      o = list_modules(simple_modules(r));
    } else if (*inj_cmd) {
      command = "injectives";
      o = list_modules(indecomposable_injectives(r));
    } else if (*uni_cmd) {
      command = "uniforms";
      o = list_modules(uniform_modules(r));
    } else if (*classify_cmd) {
      command = "classify";
      o = cmd_classify(module());
    } else if (*hull_cmd) {
      command = "hull";
      o = cmd_hull(module());
    } else if (*corpus_cmd) {
      command = "corpus";
      o = cmd_corpus(r, c);
    } else if (*pre_cmd) {
      command = "preenvelope";
      o = cmd_preenvelope(module(), c);
    } else if (*suite_cmd) {
      command = "suite";
      o = cmd_suite(r, c);
    } else if (*kt_cmd) {
      command = "keytrick";
      o = cmd_keytrick(module());
    }
    emit(c, command, r, o, out);
    return o.code;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const InvalidSpec& e) {
    err << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const AxiomViolation& e) {
    err << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionViolated& e) {
    err << "precondition: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "failure: " << e.what() << "\n";
    return kFail;
  }
}

}  // namespace modclass::cli
