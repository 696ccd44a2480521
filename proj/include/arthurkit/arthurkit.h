/* C interface to arthurkit: parse workspaces in the text grammar and run
 * subcommands on them. All strings are UTF-8, NUL-terminated. Strings
 * returned through char** are owned by the caller and released with
 * ak_string_free. Functions are thread-safe on distinct handles; the last
 * error message is thread-local. */
#ifndef ARTHURKIT_H
#define ARTHURKIT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(ARTHURKIT_BUILDING_DLL)
#define AK_API __attribute__((visibility("default")))
#else
#define AK_API
#endif

typedef enum ak_status {
  AK_OK = 0,
  AK_ERR_INPUT = 1,        /* malformed text or invalid object */
  AK_ERR_PRECONDITION = 2, /* operation outside its domain */
  AK_ERR_UNSUPPORTED = 3,  /* valid input the implementation cannot decide */
  AK_ERR_ARGUMENT = 4,     /* null handle, bad option key or value */
  AK_ERR_INTERNAL = 5
} ak_status;

typedef struct ak_workspace ak_workspace;
typedef struct ak_options ak_options;

AK_API const char* ak_version(void);
AK_API const char* ak_status_name(ak_status s);
/* Message of the last failing call on this thread, "" if none. */
AK_API const char* ak_last_error(void);
AK_API void ak_string_free(char* s);

AK_API ak_status ak_workspace_parse(const char* text, ak_workspace** out);
AK_API void ak_workspace_free(ak_workspace* ws);
AK_API size_t ak_workspace_object_count(const ak_workspace* ws);
/* "param", "ems" or "ldata". The pointer stays valid for the process. */
AK_API ak_status ak_workspace_object_kind(const ak_workspace* ws, size_t index, const char** kind);
AK_API ak_status ak_workspace_object_text(const ak_workspace* ws, size_t index, char** out);
AK_API ak_status ak_workspace_serialize(const ak_workspace* ws, char** out);
AK_API ak_status ak_workspace_to_json(const ak_workspace* ws, char** out);

AK_API ak_status ak_options_new(ak_options** out);
AK_API void ak_options_free(ak_options* opts);
/* Keys: json, strict (0|1), oracle, group (Sp|SO), n, max-N, kind
 * (param|ems|ldata), rhos (comma separated: triv, chi, s). */
AK_API ak_status ak_options_set(ak_options* opts, const char* key, const char* value);

AK_API size_t ak_command_count(void);
AK_API const char* ak_command_name(size_t index);
/* 1 if the command reads a workspace, 0 if it generates one. */
AK_API int ak_command_needs_input(const char* command);

/* Runs a subcommand. ws may be NULL for commands that need no input and opts
 * may be NULL for defaults. On AK_OK, *output holds the text (or JSON) and
 * *exit_code is 0, or 2 for a negative verdict under strict. On failure
 * *output is NULL and *exit_code is 1. */
AK_API ak_status ak_run(const char* command, const ak_workspace* ws, const ak_options* opts, char** output,
                        int* exit_code);

#ifdef __cplusplus
}
#endif

#endif /* ARTHURKIT_H */
