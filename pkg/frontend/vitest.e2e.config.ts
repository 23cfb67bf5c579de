import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["e2e/**/*.test.ts"],
    environment: "jsdom",
    testTimeout: 240_000,
    hookTimeout: 240_000,
    // one service process at a time
    fileParallelism: false,
  },
});
