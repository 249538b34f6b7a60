import { describe, expect, it } from "vitest";

import {
  appendStrings,
  applyMembership,
  applyMpl,
  applyPump,
  initialState,
  setError,
  setRegex,
} from "../src/state.js";
import {
  renderMembership,
  renderPumping,
  renderStrings,
  textContent,
} from "../src/views.js";

describe("membership view", () => {
  it("renders the verdict word", () => {
    const s = applyMembership(setRegex(initialState(), "e"), true);
    expect(renderMembership(s)).toContain(">True<");
    const f = applyMembership(s, false);
    expect(renderMembership(f)).toContain(">False<");
  });

  it("renders syntax errors with their position", () => {
    const s = setError(initialState(), {
      code: "syntax_error", message: "star without preceding operand", position: 0,
    }, "unused");
    const html = renderMembership(s);
    expect(html).toContain("position 0");
    expect(html).not.toContain("Retry");
  });

  it("offers retry on network errors", () => {
    const s = setError(initialState(), null, "service unreachable");
    expect(renderMembership(s)).toContain("Retry");
  });
});

describe("strings view", () => {
  it("renders the empty string as the epsilon character", () => {
    const s = appendStrings(setRegex(initialState(), "a*"), {
      strings: ["", "a"], epsilon_flags: [true, false],
      next_offset: 2, exhausted: false,
    });
    const html = renderStrings(s);
    expect(html).toContain('class="lang-string epsilon">e</li>');
    expect(html).toContain(">a</li>");
    expect(html).not.toContain("disabled");
  });

  it("disables the button on exhaustion", () => {
    const s = appendStrings(setRegex(initialState(), "ab"), {
      strings: ["ab"], epsilon_flags: [false], next_offset: 1, exhausted: true,
    });
    expect(renderStrings(s)).toContain("disabled");
  });
});

describe("pumping view", () => {
  const withResult = applyMpl(setRegex(initialState(), "1*01*01*"), {
    p: 3, witness: "001", split: { x: "00", y: "1", z: "" },
    mode: "exact", counterexample: "00",
  });

  it("shows p, witness, and the segmented split", () => {
    const html = renderPumping(withResult);
    expect(html).toContain("Minimum pumping length: <strong>3</strong>");
    expect(html).toContain('class="seg seg-x">00<');
    expect(html).toContain('class="seg seg-y">1<');
    expect(html).toContain('class="seg seg-z"><');
  });

  it("split markup is lossless styling", () => {
    const html = renderPumping(withResult);
    const splitHtml = html.match(/<span class="split">.*?<\/span><\/span>/)![0];
    expect(textContent(splitHtml)).toBe("001");
  });

  it("explains the counterexample when p > 1", () => {
    const html = renderPumping(withResult);
    expect(html).toContain("At length 2");
    expect(html).toContain(">00</code>");
    expect(html).toContain("no valid split");
  });

  it("shows the live pump result", () => {
    const s = applyPump(withResult, { pumped: "00", member: true });
    const html = renderPumping(s);
    expect(html).toContain("i=0");
    expect(html).toContain(">00</code>");
    expect(html).toContain(">True</span>");
  });

  it("renders a pumped empty string as epsilon", () => {
    const s = applyPump(
      applyMpl(setRegex(initialState(), "a*"), {
        p: 1, witness: "a", split: { x: "", y: "a", z: "" },
        mode: "exact", counterexample: null,
      }),
      { pumped: "", member: true },
    );
    expect(renderPumping(s)).toContain(">e</code>");
  });
});
