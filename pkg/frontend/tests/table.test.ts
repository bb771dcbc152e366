import { describe, expect, it } from "vitest";

import { expectedGroups, parseTableExport } from "../src/table.js";

const EXPORT = "e\t10\t1\nn\t11\t2\nm\t101101\t1,2,1\nd\t111010\t3,1\n";

describe("parseTableExport", () => {
  it("reads symbol, written form and groups", () => {
    const table = parseTableExport(EXPORT);
    expect(table.size).toBe(4);
    expect(table.get("m")).toEqual({ symbol: "m", written: "101101", groups: "1,2,1" });
  });

  it("skips blank lines", () => {
    expect(parseTableExport("\n" + EXPORT + "\n").size).toBe(4);
  });
});

describe("expectedGroups", () => {
  const table = parseTableExport(EXPORT);

  it("returns the tap pattern hint", () => {
    expect(expectedGroups(table, "n")).toBe("2");
    expect(expectedGroups(table, "D")).toBe("3,1");
  });

  it("has no hint for spaces or unknown letters", () => {
    expect(expectedGroups(table, " ")).toBeNull();
    expect(expectedGroups(table, "7")).toBeNull();
  });
});
