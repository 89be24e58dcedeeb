#include <chrono>

#include "json.hpp"
#include "kittab/errors.hpp"
#include "kittab/generic.hpp"
#include "kittab/session.hpp"

namespace kittab {

namespace {

using json = nlohmann::ordered_json;

struct Outcome {
  std::optional<Ideal> ideal;
  std::optional<VerificationReport> report;
};

class Context {
 public:
  Context(const Session& s, const Node& n) : session_(s), node_(n) {}

  const Ideal& ideal(std::size_t i) const { return session_.ideals.find(node_.args.at(i).text)->second; }
  const PolyMatrix& matrix(std::size_t i) const {
    return session_.matrices.find(node_.args.at(i).text)->second;
  }
  bool has(std::size_t i) const { return i < node_.args.size(); }
  std::size_t count(std::size_t i) const {
    const auto& a = node_.args.at(i);
    if (auto it = session_.scalars.find(a.text); it != session_.scalars.end()) return it->second;
    return std::stoul(a.text);
  }

 private:
  const Session& session_;
  const Node& node_;
};

Outcome ideal_outcome(Ideal I) { return {std::move(I), std::nullopt}; }
Outcome report_outcome(VerificationReport r) { return {std::nullopt, std::move(r)}; }

KittInput kitt_input(const Context& c) {
  const Ideal& a = c.ideal(0);
  const Ideal& I = c.ideal(1);
  if (I.is_zero()) throw DomainError("I must have a nonzero generator");
  if (c.has(2)) return KittInput(I.generators(), a.generators(), c.matrix(2));
  return KittInput::from_generators(I.generators(), a.generators());
}

GenericExtension extension(const Context& c, std::size_t count_arg, std::size_t ideal_arg) {
  const Ideal& I = c.ideal(ideal_arg);
  if (I.is_zero()) throw DomainError("I must have a nonzero generator");
  return GenericExtension::make(I.generators(), c.count(count_arg));
}

Outcome execute(const std::string& cmd, const Context& c) {
  if (cmd == "gb") {
    const Ideal& I = c.ideal(0);
    return ideal_outcome(Ideal(I.ring(), I.groebner_basis()));
  }
  if (cmd == "colon") return ideal_outcome(colon(c.ideal(0), c.ideal(1)));
  if (cmd == "intersect") return ideal_outcome(intersect(c.ideal(0), c.ideal(1)));
  if (cmd == "dim") {
    DimensionResult d = dimension(c.ideal(0));
    VerificationReport rep("dim");
    rep.value("dim", std::to_string(d.dim));
    rep.value("height", height_string(d));
    return report_outcome(std::move(rep));
  }
  if (cmd == "kitt") return ideal_outcome(kitt_ideal(kitt_input(c)).ideal);
  if (cmd == "generic_kitt") return ideal_outcome(generic_kitt(extension(c, 0, 1)));
  if (cmd == "generic_residual") return ideal_outcome(generic_residual(extension(c, 0, 1)));
  if (cmd == "specialize") {
    auto ext = extension(c, 0, 1);
    auto spec = SpecializationData::make(ext, c.matrix(2));
    return ideal_outcome(specialize(generic_kitt(ext), ext, spec));
  }
  if (cmd == "residual_check") return report_outcome(residual_check(c.ideal(0), c.ideal(1), c.count(2)).report);
  if (cmd == "verify_specialization") return report_outcome(verify_specialization(kitt_input(c)));
  if (cmd == "verify_deformation")
    return report_outcome(verify_deformation(c.ideal(0), c.ideal(1), c.count(2)));
  if (cmd == "height_report") {
    const Ideal& I = c.ideal(1);
    if (I.is_zero()) throw DomainError("I must have a nonzero generator");
    return report_outcome(height_report(I.generators(), c.ideal(0).generators(), c.count(2)));
  }
  if (cmd == "g_condition") {
    std::size_t s = c.count(1);
    VerificationReport rep("g_condition");
    rep.note(kHeightNote);
    rep.value("G_" + std::to_string(s), g_condition(c.ideal(0), s) ? "true" : "false");
    return report_outcome(std::move(rep));
  }
  throw std::logic_error("unhandled command " + cmd);
}

std::string echo(const Node& n) {
  std::string s = n.name;
  for (const auto& a : n.args) s += " " + a.text;
  return s;
}

json inputs_json(const Session& session, const Node& n) {
  json out = json::array();
  for (const auto& a : n.args) {
    json item = {{"name", a.text}};
    switch (a.kind) {
      case Argument::Kind::ideal: {
        json gens = json::array();
        for (const auto& g : session.ideals.find(a.text)->second.generators()) gens.push_back(g.to_string());
        item["ideal"] = std::move(gens);
        break;
      }
      case Argument::Kind::matrix:
        item["matrix"] = session.matrices.find(a.text)->second.to_string();
        break;
      case Argument::Kind::count: {
        auto it = session.scalars.find(a.text);
        item["count"] = it != session.scalars.end() ? it->second : std::stoul(a.text);
        break;
      }
    }
    out.push_back(std::move(item));
  }
  return out;
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  if (dynamic_cast<const StructuralError*>(&e)) return "structural";
  return "internal";
}

void write_text(std::ostream& out, const Session& session, const Node& n, const Outcome* result,
                const std::exception* error) {
  out << ">>> " << echo(n) << ";\n";
  if (error) {
    out << "error (" << error_kind(*error) << "): " << error->what() << "\n";
  } else if (result->ideal) {
    const Ideal& I = *result->ideal;
    if (!same_ring(I.ring(), session.ring)) out << "ring " << I.ring()->to_string() << "\n";
    out << "generators (" << I.generators().size() << "):\n";
    for (const auto& g : I.generators()) out << "  " << g.to_string() << "\n";
  } else {
    out << result->report->to_text();
  }
  out << "\n";
}

void write_json(std::ostream& out, const Session& session, const Node& n, const Outcome* result,
                const std::exception* error, double millis) {
  json obj = {{"command", echo(n)}, {"inputs", inputs_json(session, n)}};
  if (error) {
    obj["error"] = {{"kind", error_kind(*error)}, {"message", error->what()}};
  } else if (result->ideal) {
    const Ideal& I = *result->ideal;
    obj["ring"] = I.ring()->to_string();
    json gens = json::array();
    for (const auto& g : I.generators()) gens.push_back(g.to_string());
    obj["generators"] = std::move(gens);
  } else {
    obj["report"] = result->report->to_json();
  }
  obj["millis"] = millis;
  out << obj.dump() << "\n";
}

}  // namespace

RunSummary run_session(const Session& session, std::ostream& out, const RunOptions& options) {
  RunSummary summary;
  for (const auto& node : session.nodes) {
    if (node.kind != Node::Kind::command) continue;
    ++summary.commands;
    auto start = std::chrono::steady_clock::now();
    std::optional<Outcome> result;
    try {
      result = execute(node.name, Context(session, node));
    } catch (const std::bad_alloc&) {
      throw;
    } catch (const std::exception& e) {
      ++summary.errors;
      std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
      if (options.json)
        write_json(out, session, node, nullptr, &e, ms.count());
      else
        write_text(out, session, node, nullptr, &e);
      out.flush();
      continue;
    }
    std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    if (result->report && !result->report->passed()) ++summary.failed_reports;
    if (options.json)
      write_json(out, session, node, &*result, nullptr, ms.count());
    else
      write_text(out, session, node, &*result, nullptr);
    out.flush();
  }
  return summary;
}

}  // namespace kittab
