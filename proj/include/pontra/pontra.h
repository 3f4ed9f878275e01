/* C interface to the duality workbench: one session object, one
 * JSON-in/JSON-out entry point, integer status codes matching the
 * command-line exit codes. */
#ifndef PONTRA_H
#define PONTRA_H

#ifdef __cplusplus
extern "C" {
#endif

#define PONTRA_OK 0
#define PONTRA_ERR_IO 2
#define PONTRA_ERR_VALIDATION 3
#define PONTRA_ERR_INTERNAL 4

typedef struct pontra_session pontra_session;

/* Returns NULL only on allocation failure. */
pontra_session* pontra_open(void);
void pontra_close(pontra_session* s);

/* Runs one job described by a JSON request.  On PONTRA_OK, *report_json
 * receives a NUL-terminated report released with pontra_free; on any
 * other status *report_json is set to NULL and pontra_last_error
 * describes the failure.  request_json and report_json must not be NULL. */
int pontra_run_job(pontra_session* s, const char* request_json, char** report_json);

/* Message from the most recent failing call on this session; empty
 * string after a success.  Owned by the session. */
const char* pontra_last_error(const pontra_session* s);

/* Library version string, owned by the library. */
const char* pontra_version(void);

void pontra_free(char* p);

#ifdef __cplusplus
}
#endif

#endif /* PONTRA_H */
