// Browser entry point; everything testable lives in app.ts.

import { start } from "./app.js";

start(window);
