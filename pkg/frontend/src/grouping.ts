// Live view of the pattern a user is tapping.  Mirrors the server's gap
// thresholds for display only; the decoded letters always come from the
// server (single source of truth).

export const GROUP_GAP_RATIO = 1.5;
export const LETTER_GAP_RATIO = 2.5;

/** Split onsets into letters of tap-group counts, like the server does. */
export function groupTaps(
  onsets: readonly number[],
  unitMs: number,
  groupGapRatio = GROUP_GAP_RATIO,
  letterGapRatio = LETTER_GAP_RATIO,
): number[][] {
  if (onsets.length === 0) return [];
  const letters: number[][] = [[1]];
  for (let i = 1; i < onsets.length; i++) {
    const gap = onsets[i]! - onsets[i - 1]!;
    const letter = letters[letters.length - 1]!;
    if (gap < groupGapRatio * unitMs) {
      letter[letter.length - 1]!++;
    } else if (gap < letterGapRatio * unitMs) {
      letter.push(1);
    } else {
      letters.push([1]);
    }
  }
  return letters;
}

/** The still-open letter as the user sees it while tapping: "1,2". */
export function livePattern(onsets: readonly number[], unitMs: number): string {
  const letters = groupTaps(onsets, unitMs);
  if (letters.length === 0) return "";
  return letters[letters.length - 1]!.join(",");
}
