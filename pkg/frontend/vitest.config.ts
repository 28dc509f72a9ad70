import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["tests/**/*.test.ts"],
    // integration tests boot the engine server, so leave headroom
    testTimeout: 30_000,
    hookTimeout: 30_000,
  },
});
