// Line-oriented text grammar and JSON rendering of workspaces.
//
//   group (Sp|SO) <n>
//   rho <label> dim <d> parity (O|S|N) [unramified] [dual <label>]
//   param <label> [@p/q] S<a> S<b> ; <label> ... ; ...
//   ems <label> [A,B] l=<int> eta=(+|-) ; <label> [A,B] ... ; ...
//   ldata L( D(<label>,x,y) ... ; phi = <label>*S<k> + ... | 0 ; eps = <label>*S<k>:(+|-), ... )
//
// One object per line; '#' starts a comment. A group line applies to the
// objects after it and may be repeated. A non-self-dual rho needs a dual
// label, which is declared implicitly if absent.
#pragma once

#include <variant>

#include <json.hpp>

#include "arthurkit/ems.hpp"

namespace arthurkit {

enum class ObjectKind { Param, Ems, LData };
std::string kind_name(ObjectKind k);

using WorkspaceValue = std::variant<ArthurParameter, ExtendedMultiSegment, LData>;

struct WorkspaceObject {
  int line = 0;
  WorkspaceValue value;

  ObjectKind kind() const { return static_cast<ObjectKind>(value.index()); }
};

GroupTag group_of(const WorkspaceValue& v);

struct Workspace {
  std::optional<GroupTag> group;  // the first group line
  std::map<std::string, RhoSymbol> rhos;
  std::vector<WorkspaceObject> objects;

  // Adds rho and, for a non-self-dual rho, its contragredient.
  void declare(const RhoSymbol& rho);
  // Declares every rho used by the object.
  void declare_all(const WorkspaceValue& v);
};

// Throws InputError with "line N: ..." on syntax errors, unknown labels and
// structural violations. Semantic checks (dimension, good parity, sign
// condition) are left to the commands.
Workspace parse_workspace(std::string_view text);

std::string serialize_group(GroupTag g);
std::string serialize_rho(const RhoSymbol& rho);
std::string serialize(const ArthurParameter& psi);
std::string serialize(const ExtendedMultiSegment& e);
std::string serialize(const LData& pi);
std::string serialize(const WorkspaceValue& v);
// First group line, rho lines, then one line per object with a group line
// wherever the group changes.
std::string serialize_workspace(const Workspace& ws);

nlohmann::json to_json(GroupTag g);
nlohmann::json to_json(const RhoSymbol& rho);
nlohmann::json to_json(const Summand& s);
nlohmann::json to_json(const ArthurParameter& psi);
nlohmann::json to_json(const ExtendedMultiSegment& e);
nlohmann::json to_json(const LData& pi);
nlohmann::json to_json(const WorkspaceValue& v);
nlohmann::json to_json(const Workspace& ws);

}  // namespace arthurkit
