// The code table as exported by `tapcode table` (symbol, written form,
// tap groups per line, tab separated).  Fetched once at drill start.

export interface TableEntry {
  symbol: string;
  written: string;
  groups: string;
}

export function parseTableExport(text: string): Map<string, TableEntry> {
  const table = new Map<string, TableEntry>();
  for (const line of text.split("\n")) {
    if (!line.trim()) continue;
    const [symbol, written, groups] = line.split("\t");
    if (!symbol || !written) continue;
    table.set(symbol, { symbol, written, groups: groups ?? "" });
  }
  return table;
}

/** Tap-group hint for a letter, e.g. "1,2,1" for m; spaces have none. */
export function expectedGroups(
  table: Map<string, TableEntry>,
  letter: string,
): string | null {
  if (letter === " ") return null;
  return table.get(letter.toLowerCase())?.groups ?? null;
}
