#include "arthurkit/arthurkit.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "arthurkit/commands.hpp"

struct ak_workspace {
  arthurkit::Workspace ws;
};

struct ak_options {
  arthurkit::CommandOptions opts;
};

namespace {

thread_local std::string g_last_error;

ak_status fail(ak_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
ak_status guarded(F&& f) {
  g_last_error.clear();
  try {
    return f();
  } catch (const arthurkit::InputError& e) {
    return fail(AK_ERR_INPUT, e.what());
  } catch (const arthurkit::PreconditionError& e) {
    return fail(AK_ERR_PRECONDITION, e.what());
  } catch (const arthurkit::UnsupportedInput& e) {
    return fail(AK_ERR_UNSUPPORTED, e.what());
  } catch (const std::bad_alloc&) {
    return fail(AK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(AK_ERR_INTERNAL, e.what());
  }
}

bool parse_bool(const std::string& v) {
  if (v == "1" || v == "true") return true;
  if (v == "0" || v == "false") return false;
  throw std::invalid_argument("expected 0 or 1");
}

}  // namespace

extern "C" {

const char* ak_version(void) { return "0.1.0"; }

const char* ak_status_name(ak_status s) {
  switch (s) {
    case AK_OK: return "ok";
    case AK_ERR_INPUT: return "input error";
    case AK_ERR_PRECONDITION: return "precondition violation";
    case AK_ERR_UNSUPPORTED: return "unsupported input";
    case AK_ERR_ARGUMENT: return "bad argument";
    case AK_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* ak_last_error(void) { return g_last_error.c_str(); }

void ak_string_free(char* s) { std::free(s); }

ak_status ak_workspace_parse(const char* text, ak_workspace** out) {
  if (!text || !out) return fail(AK_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto h = std::make_unique<ak_workspace>();
    h->ws = arthurkit::parse_workspace(text);
    *out = h.release();
    return AK_OK;
  });
}

void ak_workspace_free(ak_workspace* ws) { delete ws; }

size_t ak_workspace_object_count(const ak_workspace* ws) { return ws ? ws->ws.objects.size() : 0; }

ak_status ak_workspace_object_kind(const ak_workspace* ws, size_t index, const char** kind) {
  if (!ws || !kind) return fail(AK_ERR_ARGUMENT, "null argument");
  if (index >= ws->ws.objects.size()) return fail(AK_ERR_ARGUMENT, "object index out of range");
  static const char* names[] = {"param", "ems", "ldata"};
  *kind = names[static_cast<int>(ws->ws.objects[index].kind())];
  return AK_OK;
}

ak_status ak_workspace_object_text(const ak_workspace* ws, size_t index, char** out) {
  if (!ws || !out) return fail(AK_ERR_ARGUMENT, "null argument");
  if (index >= ws->ws.objects.size()) return fail(AK_ERR_ARGUMENT, "object index out of range");
  return guarded([&] {
    *out = dup_string(arthurkit::serialize(ws->ws.objects[index].value));
    return AK_OK;
  });
}

ak_status ak_workspace_serialize(const ak_workspace* ws, char** out) {
  if (!ws || !out) return fail(AK_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(arthurkit::serialize_workspace(ws->ws));
    return AK_OK;
  });
}

ak_status ak_workspace_to_json(const ak_workspace* ws, char** out) {
  if (!ws || !out) return fail(AK_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(arthurkit::to_json(ws->ws).dump());
    return AK_OK;
  });
}

ak_status ak_options_new(ak_options** out) {
  if (!out) return fail(AK_ERR_ARGUMENT, "null argument");
  *out = new (std::nothrow) ak_options();
  return *out ? AK_OK : fail(AK_ERR_INTERNAL, "out of memory");
}

void ak_options_free(ak_options* opts) { delete opts; }

ak_status ak_options_set(ak_options* opts, const char* key, const char* value) {
  if (!opts || !key || !value) return fail(AK_ERR_ARGUMENT, "null argument");
  g_last_error.clear();
  std::string k = key, v = value;
  auto& o = opts->opts;
  try {
    if (k == "json") o.json = parse_bool(v);
    else if (k == "strict") o.strict = parse_bool(v);
    else if (k == "oracle") o.oracle = v;
    else if (k == "group") o.group = v;
    else if (k == "n") o.n = std::stoll(v);
    else if (k == "max-N") o.max_N = std::stoll(v);
    else if (k == "kind") o.kind = v;
    else if (k == "rhos") {
      o.rhos.clear();
      std::size_t start = 0;
      while (start <= v.size()) {
        std::size_t end = v.find(',', start);
        if (end == std::string::npos) end = v.size();
        if (end > start) o.rhos.push_back(v.substr(start, end - start));
        start = end + 1;
      }
    } else {
      return fail(AK_ERR_ARGUMENT, "unknown option '" + k + "'");
    }
  } catch (const std::exception&) {
    return fail(AK_ERR_ARGUMENT, "bad value '" + v + "' for option '" + k + "'");
  }
  return AK_OK;
}

size_t ak_command_count(void) { return arthurkit::command_names().size(); }

const char* ak_command_name(size_t index) {
  const auto& n = arthurkit::command_names();
  return index < n.size() ? n[index].c_str() : nullptr;
}

int ak_command_needs_input(const char* command) {
  return command && arthurkit::command_needs_input(command) ? 1 : 0;
}

ak_status ak_run(const char* command, const ak_workspace* ws, const ak_options* opts, char** output,
                 int* exit_code) {
  if (!command || !output || !exit_code) return fail(AK_ERR_ARGUMENT, "null argument");
  *output = nullptr;
  *exit_code = arthurkit::kExitInput;
  const auto& names = arthurkit::command_names();
  if (std::find(names.begin(), names.end(), command) == names.end())
    return fail(AK_ERR_ARGUMENT, "unknown command '" + std::string(command) + "'");
  if (arthurkit::command_needs_input(command) && !ws) return fail(AK_ERR_ARGUMENT, "command needs a workspace");
  return guarded([&] {
    static const arthurkit::Workspace empty;
    static const arthurkit::CommandOptions defaults;
    arthurkit::CommandResult r =
        arthurkit::run_command(command, ws ? ws->ws : empty, opts ? opts->opts : defaults);
    *output = dup_string(r.output);
    *exit_code = r.exit_code;
    return AK_OK;
  });
}

}  // extern "C"
