// Integration tests against a live service instance: the three views driven
// exactly as the page drives them, all facts arriving over HTTP.

import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient, ApiRequestError } from "../src/api.js";
import {
  appendStrings,
  applyMembership,
  applyMpl,
  applyPump,
  initialState,
  setError,
  setInputString,
  setPumpExponent,
  setRegex,
  type ExplorerState,
} from "../src/state.js";
import { renderMembership, renderPumping, renderStrings } from "../src/views.js";

let server: ChildProcess;
let client: ApiClient;

beforeAll(async () => {
  server = spawn("python3", ["-m", "pumplab", "serve", "--port", "0"], {
    stdio: ["ignore", "pipe", "ignore"],
  });
  const port = await new Promise<string>((resolve, reject) => {
    const timer = setTimeout(() => reject(new Error("service did not start")), 15000);
    server.stdout!.on("data", (chunk: Buffer) => {
      const match = /http:\/\/[\d.]+:(\d+)/.exec(chunk.toString());
      if (match) {
        clearTimeout(timer);
        resolve(match[1]!);
      }
    });
  });
  client = new ApiClient(`http://127.0.0.1:${port}`);
  for (let attempt = 0; attempt < 50; attempt++) {
    try {
      if (await client.health()) return;
    } catch {
      await new Promise((r) => setTimeout(r, 200));
    }
  }
  throw new Error("service never became healthy");
}, 30000);

afterAll(() => {
  server?.kill();
});

describe("membership view against the live service", () => {
  it("shows True for an embedded occurrence", async () => {
    let s = setInputString(setRegex(initialState(), "(1U0)*101(1U0)*"), "1011");
    const logBefore = client.log.length;
    const resp = await client.membership(s.regex, s.inputString);
    s = applyMembership(s, resp.member);
    expect(renderMembership(s)).toContain(">True<");
    // The verdict is traceable to exactly one service call.
    expect(client.log.length - logBefore).toBe(1);
    expect(client.log[client.log.length - 1]!.path).toBe("/api/membership");
  });

  it("accepts the empty string for the epsilon pattern", async () => {
    const resp = await client.membership("e", "");
    expect(renderMembership(applyMembership(initialState(), resp.member)))
      .toContain(">True<");
  });

  it("renders a syntax error inline at position 0", async () => {
    let s = setInputString(setRegex(initialState(), "*a"), "x");
    try {
      await client.membership(s.regex, s.inputString);
      expect.unreachable("syntax error expected");
    } catch (exc) {
      expect(exc).toBeInstanceOf(ApiRequestError);
      const err = exc as ApiRequestError;
      expect(err.status).toBe(422);
      s = setError(s, err.detail, err.message);
    }
    expect(renderMembership(s)).toContain("position 0");
  });
});

describe("strings view against the live service", () => {
  async function click(s: ExplorerState, count = 4): Promise<ExplorerState> {
    const resp = await client.strings(s.regex, count, s.stringPage.offset);
    return appendStrings(s, resp);
  }

  it("lists the first batch in shortlex order", async () => {
    let s = setRegex(initialState(), "1*01*01*");
    s = await click(s);
    expect(s.stringPage.entries.map((e) => e.value))
      .toEqual(["00", "001", "010", "100"]);
    expect(renderStrings(s)).toContain(">00</li>");
  });

  it("two clicks tile the sequence without duplicates", async () => {
    let s = setRegex(initialState(), "1*01*01*");
    s = await click(s);
    s = await click(s);
    const values = s.stringPage.entries.map((e) => e.value);
    expect(values).toHaveLength(8);
    expect(new Set(values).size).toBe(8);
    const direct = await client.strings("1*01*01*", 8, 0);
    expect(values).toEqual(direct.strings);
  });

  it("disables the button once a finite language is exhausted", async () => {
    let s = setRegex(initialState(), "ab");
    s = await click(s, 5);
    expect(s.stringPage.entries.map((e) => e.value)).toEqual(["ab"]);
    expect(s.stringPage.exhausted).toBe(true);
    expect(renderStrings(s)).toContain("disabled");
  });

  it("renders an epsilon entry from the flag", async () => {
    let s = setRegex(initialState(), "aabUa*b*");
    s = await click(s, 1);
    expect(s.stringPage.entries[0]).toEqual({ value: "", epsilon: true });
    expect(renderStrings(s)).toContain(">e</li>");
  });
});

describe("pumping view against the live service", () => {
  async function getMinPump(regex: string): Promise<ExplorerState> {
    let s = setRegex(initialState(), regex);
    const resp = await client.mpl(s.regex, "exact");
    return applyMpl(s, resp);
  }

  async function slide(s: ExplorerState, i: number): Promise<ExplorerState> {
    s = setPumpExponent(s, i);
    const split = s.mpl.split!;
    const resp = await client.pump(s.regex, split.x, split.y, split.z,
                                   s.mpl.pumpExponent);
    return applyPump(s, resp);
  }

  it("two-zero-blocks language: p=3, witness 001, slider at 0 stays a member", async () => {
    let s = await getMinPump("1*01*01*");
    expect(s.mpl.p).toBe(3);
    expect(s.mpl.witness).toBe("001");
    expect(s.mpl.split).toEqual({ x: "00", y: "1", z: "" });
    expect(s.mpl.counterexample).toBe("00");
    s = await slide(s, 0);
    expect(s.mpl.pumped).toBe("00");
    expect(s.mpl.pumpedMember).toBe(true);
    const html = renderPumping(s);
    expect(html).toContain("Minimum pumping length: <strong>3</strong>");
    expect(html).toContain(">True</span>");
  });

  it("union of finite and infinite parts: p=1", async () => {
    const s = await getMinPump("aabUa*b*");
    expect(s.mpl.p).toBe(1);
  });

  it("zero-run language: witness 101 segmented [1][0][1], i=4 pumps to 100001", async () => {
    let s = await getMinPump("10*1");
    expect(s.mpl.p).toBe(3);
    expect(s.mpl.witness).toBe("101");
    expect(s.mpl.split).toEqual({ x: "1", y: "0", z: "1" });
    s = await slide(s, 4);
    expect(s.mpl.pumped).toBe("100001");
    expect(s.mpl.pumpedMember).toBe(true);
    s = await slide(s, 0);
    expect(s.mpl.pumped).toBe("11");
    expect(s.mpl.pumpedMember).toBe(true);
  });

  it("an intentionally invalid split is exposed at i=0", async () => {
    const resp = await client.pump("10*1", "", "1", "01", 0);
    expect(resp).toEqual({ pumped: "01", member: false });
    let s = applyMpl(setRegex(initialState(), "10*1"), {
      p: 3, witness: "101", split: { x: "", y: "1", z: "01" },
      mode: "exact", counterexample: "11",
    });
    s = applyPump(setPumpExponent(s, 0), resp);
    expect(renderPumping(s)).toContain(">False</span>");
  });

  it("every displayed fact came from the service log", () => {
    // No view computes language facts locally; the log covers them all.
    const paths = new Set(client.log.map((entry) => entry.path));
    expect(paths).toContain("/api/membership");
    expect(paths).toContain("/api/strings");
    expect(paths).toContain("/api/mpl");
    expect(paths).toContain("/api/pump");
  });
});
