#ifndef HIGGSLAB_H
#define HIGGSLAB_H

#ifdef __cplusplus
extern "C" {
#endif

/* C surface of the higgslab engine. All state lives behind the opaque
 * handle; strings returned by hl_run are malloc'd JSON reports and must be
 * released with hl_free_string. */

typedef struct hl_engine hl_engine;

hl_engine* hl_engine_new(void);
void hl_engine_free(hl_engine* e);

/* Runs one command ("construct-split", "build-extension", "verify",
 * "cayley", "direct-image", "charclass", "census", "selftest") against a
 * JSON config. Stores the process exit code in *exit_code: 0 all checks
 * pass, 1 a verification check failed, 2 malformed input. The returned
 * report is byte deterministic for a fixed config + seed. Returns NULL only
 * on allocation failure. */
char* hl_run(hl_engine* e, const char* command, const char* config_json,
             int parallel, int* exit_code);

/* Failure detail from the most recent hl_run, or "" when it passed. Owned
 * by the engine; valid until the next hl_run or hl_engine_free. */
const char* hl_last_error(const hl_engine* e);

void hl_free_string(char* s);

const char* hl_version(void);

#ifdef __cplusplus
}
#endif

#endif
