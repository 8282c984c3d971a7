import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { FetchLike, FetchResponse } from "../src/api.js";

const here = dirname(fileURLToPath(import.meta.url));

/** Captured service responses for the golden fixture bundle, keyed by path. */
export const API_FIXTURES: Record<string, unknown> = JSON.parse(
  readFileSync(join(here, "fixtures", "api.json"), "utf-8"),
);

function respond(payload: unknown, status = 200): FetchResponse {
  return {
    ok: status < 400,
    status,
    json: () => Promise.resolve(payload),
  };
}

export interface RecordingFetch extends FetchLike {
  calls: string[];
}

/** Fetch backed by the captured payloads; unknown paths get the API's 404 shape. */
export function fixtureFetch(): RecordingFetch {
  const calls: string[] = [];
  const impl = ((url: string) => {
    calls.push(url);
    if (url in API_FIXTURES) {
      return Promise.resolve(respond(API_FIXTURES[url]));
    }
    return Promise.resolve(
      respond({ status: 404, code: "not_found", message: `no fixture for ${url}` }, 404),
    );
  }) as RecordingFetch;
  impl.calls = calls;
  return impl;
}

export interface Deferred {
  url: string;
  resolve(): void;
}

/** Fetch whose responses wait until the test releases them, for testing
 * stale-response discarding with out-of-order completion. */
export function deferredFetch(): { fetch: FetchLike; queue: Deferred[] } {
  const queue: Deferred[] = [];
  const fetchImpl: FetchLike = (url) =>
    new Promise((resolvePromise) => {
      queue.push({
        url,
        resolve: () => {
          if (url in API_FIXTURES) {
            resolvePromise(respond(API_FIXTURES[url]));
          } else {
            resolvePromise(
              respond(
                { status: 404, code: "not_found", message: `no fixture for ${url}` },
                404,
              ),
            );
          }
        },
      });
    });
  return { fetch: fetchImpl, queue };
}
