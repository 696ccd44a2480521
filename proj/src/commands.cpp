#include "arthurkit/commands.hpp"

#include "arthurkit/arthur_algo.hpp"
#include "arthurkit/census.hpp"
#include "arthurkit/classify.hpp"

namespace arthurkit {

using nlohmann::json;

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "validate",     "decompose",  "lparam",         "dual-param",          "characters",
      "ems-check",    "ems-pi",     "ems-dual",       "l-class",             "tempered-packet",
      "singleton",    "shahidi",    "classify-unramified", "unramified-member", "arthur-type",
      "steinberg",    "enumerate"};
  return names;
}

bool command_needs_input(const std::string& name) { return name != "steinberg" && name != "enumerate"; }

namespace {

const char* tf(bool b) { return b ? "true" : "false"; }

std::string summand_list(const std::vector<Summand>& v) {
  if (v.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " + " : "") + v[i].to_string();
  return s;
}

std::string lpiece_text(const LPiece& p) {
  std::string s = p.rho.label;
  if (!p.twist.is_zero()) s += "@" + p.twist.to_string();
  return s + "*S" + std::to_string(p.a);
}

// Collects per-object results; text blocks get a "# line N" marker when the
// workspace holds more than one applicable object.
class Emitter {
 public:
  Emitter(const CommandOptions& o, std::string command) : opts_(o), command_(std::move(command)) {}

  void begin(const WorkspaceObject& o, std::size_t total) {
    if (!opts_.json && total > 1) text_ += "# line " + std::to_string(o.line) + "\n";
    current_ = json::object();
    current_["line"] = o.line;
  }
  void line(const std::string& s) { text_ += s + "\n"; }
  json& field() { return current_; }
  void end() { results_.push_back(current_); }
  void negative() { negative_ = true; }

  CommandResult finish() const {
    CommandResult r;
    if (opts_.json) {
      r.output = json{{"command", command_}, {"results", results_}}.dump() + "\n";
    } else {
      r.output = text_;
    }
    r.exit_code = (opts_.strict && negative_) ? kExitNegative : kExitOk;
    return r;
  }

 private:
  const CommandOptions& opts_;
  std::string command_;
  std::string text_;
  json results_ = json::array();
  json current_;
  bool negative_ = false;
};

template <class T>
std::vector<std::pair<const WorkspaceObject*, const T*>> objects_of(const Workspace& ws, const std::string& cmd) {
  std::vector<std::pair<const WorkspaceObject*, const T*>> out;
  for (const auto& o : ws.objects)
    if (auto* v = std::get_if<T>(&o.value)) out.emplace_back(&o, v);
  if (out.empty()) {
    std::string want = std::is_same_v<T, ArthurParameter> ? "param" : std::is_same_v<T, LData> ? "ldata" : "ems";
    throw InputError(cmd + ": input has no " + want + " object");
  }
  return out;
}

CommandResult emit_workspace(const Workspace& base, std::vector<WorkspaceValue> values, const CommandOptions& opts,
                             const std::vector<std::string>& notes = {}) {
  Workspace ws;
  ws.group = values.empty() ? base.group : std::optional<GroupTag>(group_of(values.front()));
  for (const auto& v : values) ws.declare_all(v);
  for (auto& v : values) ws.objects.push_back(WorkspaceObject{0, std::move(v)});
  CommandResult r;
  if (opts.json) {
    json j = to_json(ws);
    if (!notes.empty()) j["notes"] = notes;
    r.output = j.dump() + "\n";
    return r;
  }
  if (notes.empty()) {
    r.output = serialize_workspace(ws);
    return r;
  }
  // Attach each note as a trailing comment on its object line.
  std::string text = serialize_workspace(ws);
  std::string out;
  std::size_t obj = 0, start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    std::string line = text.substr(start, end - start);
    start = end + 1;
    bool is_object = line.rfind("param", 0) == 0 || line.rfind("ems", 0) == 0 || line.rfind("ldata", 0) == 0;
    if (is_object && obj < notes.size() && !notes[obj].empty()) line += "  # " + notes[obj];
    if (is_object) ++obj;
    out += line + "\n";
  }
  r.output = out;
  return r;
}

CommandResult cmd_validate(const Workspace& ws, const CommandOptions& opts) {
  Emitter em(opts, "validate");
  auto objs = objects_of<ArthurParameter>(ws, "validate");
  for (auto [o, psi] : objs) {
    em.begin(*o, objs.size());
    Report r = validate(*psi);
    em.line(r.ok ? "validate: ok" : "validate: violation: " + r.message);
    em.field()["ok"] = r.ok;
    if (!r.ok) {
      em.field()["message"] = r.message;
      em.negative();
    } else {
      em.field()["good_parity"] = is_good_parity(*psi);
    }
    em.end();
  }
  return em.finish();
}

CommandResult cmd_decompose(const Workspace& ws, const CommandOptions& opts) {
  Emitter em(opts, "decompose");
  auto objs = objects_of<ArthurParameter>(ws, "decompose");
  for (auto [o, psi] : objs) {
    em.begin(*o, objs.size());
    Decomposition d = decompose(*psi);
    em.line("nu_pos: " + summand_list(d.nu_pos));
    em.line("np: " + summand_list(d.np));
    em.line("gp: " + serialize_group(d.gp.group) + " ; " + serialize(d.gp));
    json nu = json::array(), np = json::array();
    for (const auto& s : d.nu_pos) nu.push_back(to_json(s));
    for (const auto& s : d.np) np.push_back(to_json(s));
    em.field()["nu_pos"] = nu;
    em.field()["np"] = np;
    em.field()["gp"] = to_json(WorkspaceValue(d.gp));
    em.end();
  }
  return em.finish();
}

CommandResult cmd_lparam(const Workspace& ws, const CommandOptions& opts) {
  Emitter em(opts, "lparam");
  auto objs = objects_of<ArthurParameter>(ws, "lparam");
  for (auto [o, psi] : objs) {
    em.begin(*o, objs.size());
    LParameter phi = l_parameter_of(*psi);
    std::string s;
    json arr = json::array();
    for (const auto& p : phi.pieces.expanded()) {
      s += (s.empty() ? "" : " + ") + lpiece_text(p);
      arr.push_back(json{{"rho", p.rho.label}, {"x", p.twist.to_string()}, {"a", p.a}});
    }
    em.line("lparam: " + s);
    em.field()["pieces"] = arr;
    em.end();
  }
  return em.finish();
}

CommandResult cmd_dual_param(const Workspace& ws, const CommandOptions& opts) {
  std::vector<WorkspaceValue> out;
  for (auto [o, psi] : objects_of<ArthurParameter>(ws, "dual-param")) out.emplace_back(dual_parameter(*psi));
  return emit_workspace(ws, std::move(out), opts);
}

CommandResult cmd_characters(const Workspace& ws, const CommandOptions& opts) {
  Emitter em(opts, "characters");
  auto objs = objects_of<ArthurParameter>(ws, "characters");
  for (auto [o, psi] : objs) {
    em.begin(*o, objs.size());
    CharacterTable t = characters_of(*psi);
    em.line("characters: " + std::to_string(t.characters.size()));
    json chars = json::array();
    for (const auto& eps : t.characters) {
      std::string s = "eps =";
      json c = json::array();
      for (std::size_t i = 0; i < eps.size(); ++i) {
        s += std::string(i ? ", " : " ") + t.distinct[i].first.to_string() + ":" + (eps[i] > 0 ? "+" : "-");
        c.push_back(eps[i] > 0 ? "+" : "-");
      }
      em.line(s);
      chars.push_back(c);
    }
    json comps = json::array();
    for (const auto& [s, m] : t.distinct) comps.push_back(json{{"summand", to_json(s)}, {"multiplicity", m}});
    em.field()["components"] = comps;
    em.field()["characters"] = chars;
    em.end();
  }
  return em.finish();
}

CommandResult cmd_ems_check(const Workspace& ws, const CommandOptions& opts) {
  Emitter em(opts, "ems-check");
  auto objs = objects_of<ExtendedMultiSegment>(ws, "ems-check");
  for (auto [o, e] : objs) {
    em.begin(*o, objs.size());
    Report r = check_ems(*e);
    bool p = order_check(*e, OrderMode::P), pp = order_check(*e, OrderMode::Pprime);
    bool sign = sign_condition(*e), L = satisfies_L(*e);
    em.line(std::string("order-P: ") + tf(p));
    em.line(std::string("order-Pprime: ") + tf(pp));
    em.line(std::string("sign-condition: ") + tf(sign));
    em.line(std::string("condition-L: ") + tf(L));
    em.line(r.ok ? "ems: valid" : "ems: invalid: " + r.message);
    em.field()["order_P"] = p;
    em.field()["order_Pprime"] = pp;
    em.field()["sign_condition"] = sign;
    em.field()["condition_L"] = L;
    em.field()["valid"] = r.ok;
    if (!r.ok) {
      em.field()["message"] = r.message;
      em.negative();
    }
    em.end();
  }
  return em.finish();
}

CommandResult cmd_ems_pi(const Workspace& ws, const CommandOptions& opts) {
  std::vector<WorkspaceValue> out;
  for (auto [o, e] : objects_of<ExtendedMultiSegment>(ws, "ems-pi")) {
    if (Report r = check_ems(*e); !r.ok) throw InputError("line " + std::to_string(o->line) + ": " + r.message);
    out.emplace_back(pi_of_L(*e));
  }
  return emit_workspace(ws, std::move(out), opts);
}

CommandResult cmd_ems_dual(const Workspace& ws, const CommandOptions& opts) {
  std::vector<WorkspaceValue> out;
  for (auto [o, e] : objects_of<ExtendedMultiSegment>(ws, "ems-dual")) {
    if (Report r = check_ems(*e); !r.ok) throw InputError("line " + std::to_string(o->line) + ": " + r.message);
    out.emplace_back(dual(*e));
  }
  return emit_workspace(ws, std::move(out), opts);
}

CommandResult cmd_l_class(const Workspace& ws, const CommandOptions& opts) {
  std::vector<WorkspaceValue> out;
  for (auto [o, psi] : objects_of<ArthurParameter>(ws, "l-class")) {
    if (Report r = validate(*psi); !r.ok) throw InputError("line " + std::to_string(o->line) + ": " + r.message);
    for (auto& e : l_class(*psi)) out.emplace_back(std::move(e));
  }
  return emit_workspace(ws, std::move(out), opts);
}

CommandResult cmd_tempered_packet(const Workspace& ws, const CommandOptions& opts) {
  std::vector<WorkspaceValue> out;
  std::vector<std::string> notes;
  for (auto [o, psi] : objects_of<ArthurParameter>(ws, "tempered-packet")) {
    if (Report r = validate(*psi); !r.ok) throw InputError("line " + std::to_string(o->line) + ": " + r.message);
    if (!predicates(*psi).tempered) throw PreconditionError("tempered-packet needs a tempered parameter");
    for (auto& m : tempered_packet(l_parameter_of(*psi))) {
      out.emplace_back(make_ldata(psi->group, {}, m.datum));
      notes.push_back(m.generic ? "generic" : "");
    }
  }
  return emit_workspace(ws, std::move(out), opts, notes);
}

CommandResult cmd_singleton(const Workspace& ws, const CommandOptions& opts) {
  Emitter em(opts, "singleton");
  std::vector<std::pair<const WorkspaceObject*, TemperedData>> items;
  for (const auto& o : ws.objects) {
    if (auto* psi = std::get_if<ArthurParameter>(&o.value)) {
      if (Report r = validate(*psi); !r.ok) throw InputError("line " + std::to_string(o.line) + ": " + r.message);
      if (!predicates(*psi).tempered) throw PreconditionError("singleton needs a tempered parameter");
      TemperedData t;
      for (const auto& [s, m] : psi->summands) t.add(s.rho, s.a, m, 1);
      items.emplace_back(&o, std::move(t));
    } else if (auto* pi = std::get_if<LData>(&o.value)) {
      if (!pi->segments.empty()) throw PreconditionError("singleton needs tempered L-data (no segments)");
      items.emplace_back(&o, pi->tempered);
    }
  }
  if (items.empty()) throw InputError("singleton: input has no param or ldata object");
  for (const auto& [o, t] : items) {
    em.begin(*o, items.size());
    bool s = tempered_singleton(t, group_of(o->value));
    em.line(std::string("singleton: ") + tf(s));
    em.field()["singleton"] = s;
    if (!s) em.negative();
    em.end();
  }
  return em.finish();
}

CommandResult cmd_shahidi(const Workspace& ws, const CommandOptions& opts) {
  Emitter em(opts, "shahidi");
  auto objs = objects_of<ArthurParameter>(ws, "shahidi");
  for (auto [o, psi] : objs) {
    em.begin(*o, objs.size());
    if (Report r = validate(*psi); !r.ok) throw InputError("line " + std::to_string(o->line) + ": " + r.message);
    bool g = has_generic_member(*psi);
    em.line(std::string("generic-member: ") + tf(g));
    em.field()["generic_member"] = g;
    if (!g) em.negative();
    em.end();
  }
  return em.finish();
}

CommandResult cmd_classify_unramified(const Workspace& ws, const CommandOptions& opts) {
  Emitter em(opts, "classify-unramified");
  auto objs = objects_of<LData>(ws, "classify-unramified");
  for (auto [o, pi] : objs) {
    em.begin(*o, objs.size());
    UnramifiedVerdict v = classify_unramified(*pi);
    em.field()["accepted"] = v.accepted;
    if (!v.accepted) {
      em.line("unramified-arthur: rejected " + condition_name(v.failed) + " " + v.witness);
      em.field()["condition"] = condition_name(v.failed);
      em.field()["witness"] = v.witness;
      em.negative();
    } else {
      UnramifiedCertificate c = unramified_parameter_set(*pi);
      em.line("unramified-arthur: accepted");
      em.line(serialize(v.e));
      em.line(serialize(c.psi));
      em.line("certificate: dual " + serialize(c.dual_e) + " ; singleton " + tf(c.singleton) + " ; anti-generic " +
              tf(c.anti_generic));
      em.field()["ems"] = to_json(v.e);
      em.field()["param"] = to_json(c.psi);
      em.field()["certificate"] = json{{"dual", to_json(c.dual_e)},
                                       {"tempered_shape", c.dual_is_tempered_shape},
                                       {"singleton", c.singleton},
                                       {"anti_generic", c.anti_generic}};
    }
    em.end();
  }
  return em.finish();
}

CommandResult cmd_unramified_member(const Workspace& ws, const CommandOptions& opts) {
  Emitter em(opts, "unramified-member");
  auto objs = objects_of<ArthurParameter>(ws, "unramified-member");
  for (auto [o, psi] : objs) {
    em.begin(*o, objs.size());
    if (Report r = validate(*psi); !r.ok) throw InputError("line " + std::to_string(o->line) + ": " + r.message);
    auto m = unramified_member(*psi);
    if (m) {
      em.line(serialize(*m));
      em.field()["member"] = to_json(*m);
    } else {
      em.line("unramified-member: none");
      em.field()["member"] = nullptr;
      em.negative();
    }
    em.end();
  }
  return em.finish();
}

CommandResult cmd_arthur_type(const Workspace& ws, const CommandOptions& opts) {
  Emitter em(opts, "arthur-type");
  auto oracle = make_oracle(opts.oracle);
  auto objs = objects_of<LData>(ws, "arthur-type");
  for (auto [o, pi] : objs) {
    em.begin(*o, objs.size());
    ArthurVerdict v = arthur_type_check(*pi, *oracle);
    std::string head = "arthur-type: " + verdict_name(v.kind);
    if (v.kind == VerdictKind::NotArthurType) head += " step " + std::to_string(v.step) + ": " + v.witness;
    if (v.kind == VerdictKind::Candidate) head += " (" + v.witness + ")";
    em.line(head);
    if (v.e) em.line(serialize(*v.e));
    em.line(serialize(v.psi));
    em.field()["verdict"] = verdict_name(v.kind);
    em.field()["param"] = to_json(v.psi);
    if (v.kind == VerdictKind::NotArthurType) {
      em.field()["step"] = v.step;
      em.field()["witness"] = v.witness;
      em.negative();
    }
    if (v.e) em.field()["ems"] = to_json(*v.e);
    em.end();
  }
  return em.finish();
}

Family parse_family(const std::string& s) {
  if (s == "Sp") return Family::Sp;
  if (s == "SO") return Family::SOodd;
  throw InputError("group must be Sp or SO, got '" + s + "'");
}

CommandResult cmd_steinberg(const CommandOptions& opts) {
  Workspace ws;
  ws.group = GroupTag::make(parse_family(opts.group), opts.n);
  return emit_workspace(ws, {steinberg_parameter(*ws.group)}, opts);
}

CommandResult cmd_enumerate(const CommandOptions& opts) {
  CensusSpec spec;
  spec.family = parse_family(opts.group);
  spec.max_N = capped_max_N(opts.max_N);
  for (const auto& name : opts.rhos) {
    if (name == "triv") spec.rhos.push_back(RhoSymbol::trivial());
    else if (name == "chi") spec.rhos.push_back(RhoSymbol::self_dual("chi", 1, Parity::Orthogonal, true));
    else if (name == "s") spec.rhos.push_back(RhoSymbol::self_dual("s", 2, Parity::Symplectic));
    else throw InputError("unknown census rho '" + name + "' (expected triv, chi or s)");
  }
  if (opts.kind != "param" && opts.kind != "ems" && opts.kind != "ldata")
    throw InputError("enumerate --kind must be param, ems or ldata");
  std::vector<WorkspaceValue> values;
  for (const auto& psi : census_parameters(spec)) {
    if (opts.kind == "param") {
      values.emplace_back(psi);
    } else if (opts.kind == "ems") {
      for (auto& e : enumerate_ems(psi)) values.emplace_back(std::move(e));
    } else {
      for (const auto& e : l_class(psi)) values.emplace_back(pi_of_L(e));
    }
  }
  Workspace ws;
  if (!values.empty()) ws.group = group_of(values.front());
  for (const auto& rho : spec.rhos) ws.declare(rho);
  for (auto& v : values) ws.objects.push_back(WorkspaceObject{0, std::move(v)});
  CommandResult r;
  if (opts.json) {
    json header{{"rhos", json::array()}};
    for (const auto& [label, rho] : ws.rhos) header["rhos"].push_back(to_json(rho));
    r.output = header.dump() + "\n";
    for (const auto& o : ws.objects) r.output += to_json(o.value).dump() + "\n";
  } else {
    r.output = serialize_workspace(ws);
  }
  return r;
}

}  // namespace

CommandResult run_command(const std::string& name, const Workspace& ws, const CommandOptions& opts) {
  if (name == "validate") return cmd_validate(ws, opts);
  if (name == "decompose") return cmd_decompose(ws, opts);
  if (name == "lparam") return cmd_lparam(ws, opts);
  if (name == "dual-param") return cmd_dual_param(ws, opts);
  if (name == "characters") return cmd_characters(ws, opts);
  if (name == "ems-check") return cmd_ems_check(ws, opts);
  if (name == "ems-pi") return cmd_ems_pi(ws, opts);
  if (name == "ems-dual") return cmd_ems_dual(ws, opts);
  if (name == "l-class") return cmd_l_class(ws, opts);
  if (name == "tempered-packet") return cmd_tempered_packet(ws, opts);
  if (name == "singleton") return cmd_singleton(ws, opts);
  if (name == "shahidi") return cmd_shahidi(ws, opts);
  if (name == "classify-unramified") return cmd_classify_unramified(ws, opts);
  if (name == "unramified-member") return cmd_unramified_member(ws, opts);
  if (name == "arthur-type") return cmd_arthur_type(ws, opts);
  if (name == "steinberg") return cmd_steinberg(opts);
  if (name == "enumerate") return cmd_enumerate(opts);
  throw InputError("unknown command '" + name + "'");
}

}  // namespace arthurkit
