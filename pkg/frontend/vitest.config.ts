import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "happy-dom",
    include: ["tests/**/*.test.ts"],
    // the e2e test boots the python service and replays a full job
    testTimeout: 60_000,
    hookTimeout: 60_000,
  },
});
