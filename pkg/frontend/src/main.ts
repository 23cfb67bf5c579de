/**
 * Browser entry point. The client is served by the session service
 * itself (its --static flag), so the API lives on the same origin and
 * the base URL is empty. The session token survives reloads in
 * localStorage; the service cursor decides where play resumes.
 */

import { ApiClient } from "./api.js";
import type { TokenStore } from "./controller.js";
import { mountApp } from "./ui.js";

const TOKEN_KEY = "beliefbet-token";

const store: TokenStore = {
  get: () => window.localStorage.getItem(TOKEN_KEY),
  set: (token) => window.localStorage.setItem(TOKEN_KEY, token),
  clear: () => window.localStorage.removeItem(TOKEN_KEY),
};

const root = document.getElementById("app");
if (root === null) {
  throw new Error("missing #app mount point");
}
void mountApp(root, new ApiClient(""), store).start();
