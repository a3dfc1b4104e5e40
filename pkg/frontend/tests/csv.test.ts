import { describe, expect, it } from "vitest";

import { pairError, parseMatrixCsv, serializeMatrixCsv } from "../src/csv.js";
import { PRESETS } from "../src/presets.js";

describe("parseMatrixCsv", () => {
  it("parses the case1 preset into a 7x12 grid", () => {
    const m = parseMatrixCsv(PRESETS.case1.muCsv);
    expect(m.error).toBeNull();
    expect(m.cellErrors).toEqual([]);
    expect(m.rowLabels).toHaveLength(7);
    expect(m.colLabels).toHaveLength(12);
    expect(m.rowLabels[0]).toBe("FNN");
    expect(m.values[0][0]).toBeCloseTo(78.14, 10);
  });

  it("accepts a single cell with zero sigma", () => {
    const m = parseMatrixCsv("algorithm,B1\nA,0.0\n");
    expect(m.error).toBeNull();
    expect(m.values).toEqual([[0]]);
  });

  it("accepts comma decimals when no period is present", () => {
    const m = parseMatrixCsv('algorithm,B1\nA,"78,14"\n');
    expect(m.error).toBeNull();
    expect(m.values[0][0]).toBeCloseTo(78.14, 10);
  });

  it("flags negative cells with a badge position", () => {
    const m = parseMatrixCsv("algorithm,B1,B2\nA,1,-0.5\n");
    expect(m.error).toBeNull();
    expect(m.cellErrors).toEqual([{ row: 0, col: 1, message: "negative value" }]);
  });

  it("flags non-numeric cells", () => {
    const m = parseMatrixCsv("algorithm,B1\nA,abc\n");
    expect(m.cellErrors).toHaveLength(1);
    expect(m.cellErrors[0].message).toContain("abc");
  });

  it("reports a header-only file as empty", () => {
    const m = parseMatrixCsv("algorithm,B1\n");
    expect(m.error).toMatch(/header only/);
  });

  it("rejects a bad header", () => {
    expect(parseMatrixCsv("alg,B1\nA,1\n").error).toMatch(/algorithm/);
  });

  it("rejects ragged rows", () => {
    expect(parseMatrixCsv("algorithm,B1,B2\nA,1\n").error).toMatch(/expected 3 cells/);
  });

  it("handles CRLF and quoted names with commas", () => {
    const m = parseMatrixCsv('algorithm,"Cred, Aus",B2\r\nA,1,2\r\n');
    expect(m.error).toBeNull();
    expect(m.colLabels).toEqual(["Cred, Aus", "B2"]);
  });
});

describe("pairError", () => {
  it("accepts the bundled pairs", () => {
    for (const preset of Object.values(PRESETS)) {
      const mu = parseMatrixCsv(preset.muCsv);
      const sigma = parseMatrixCsv(preset.sigmaCsv);
      expect(pairError(mu, sigma)).toBeNull();
    }
  });

  it("reports shape mismatches", () => {
    const mu = parseMatrixCsv("algorithm,B1,B2\nA,1,2\n");
    const sigma = parseMatrixCsv("algorithm,B1\nA,1\n");
    expect(pairError(mu, sigma)).toMatch(/shape mismatch/);
  });

  it("reports label disagreements", () => {
    const mu = parseMatrixCsv("algorithm,B1\nA,1\n");
    const sigma = parseMatrixCsv("algorithm,B1\nZ,1\n");
    expect(pairError(mu, sigma)).toMatch(/algorithm names differ/);
  });
});

describe("serializeMatrixCsv", () => {
  it("round-trips the presets byte-identically modulo line endings", () => {
    for (const preset of Object.values(PRESETS)) {
      for (const text of [preset.muCsv, preset.sigmaCsv]) {
        const parsed = parseMatrixCsv(text);
        const out = serializeMatrixCsv(parsed.rowLabels, parsed.colLabels, parsed.cellText);
        const canonical = (s: string) =>
          s.replace(/\r\n/g, "\n").replace(/\n+$/, "") + "\n";
        expect(canonical(out)).toBe(canonical(text));
      }
    }
  });

  it("round-trips CRLF input to LF output with identical cells", () => {
    const crlf = 'algorithm,B1,B2\r\nA,1.50,2\r\nB,3,4.0\r\n';
    const parsed = parseMatrixCsv(crlf);
    const out = serializeMatrixCsv(parsed.rowLabels, parsed.colLabels, parsed.cellText);
    expect(out).toBe("algorithm,B1,B2\nA,1.50,2\nB,3,4.0\n");
  });

  it("quotes labels containing separators", () => {
    const out = serializeMatrixCsv(["A"], ["Cred, Aus"], [[1]]);
    expect(out).toBe('algorithm,"Cred, Aus"\nA,1\n');
    const back = parseMatrixCsv(out);
    expect(back.colLabels).toEqual(["Cred, Aus"]);
  });
});
