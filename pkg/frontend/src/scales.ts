/** The decade axis always shows all six decades, matching the analysis
 * window, even when some are empty. */
export const DECADES = ["1960s", "1970s", "1980s", "1990s", "2000s", "2010s"];

export interface LinearScale {
  (value: number): number;
  domain: [number, number];
  range: [number, number];
}

export function linear(domain: [number, number], range: [number, number]): LinearScale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0;
  const scale = ((value: number) =>
    span === 0 ? (r0 + r1) / 2 : r0 + ((value - d0) / span) * (r1 - r0)) as LinearScale;
  scale.domain = domain;
  scale.range = range;
  return scale;
}

/** Bubble area encodes appearances, so radius grows with the square root. */
export function bubbleRadius(appearances: number, maxAppearances: number, maxRadius: number): number {
  if (maxAppearances <= 0) return 0;
  return Math.sqrt(appearances / maxAppearances) * maxRadius;
}

export function decadeX(decade: string, width: number, padding: number): number {
  const index = DECADES.indexOf(decade);
  const step = (width - 2 * padding) / (DECADES.length - 1);
  return padding + index * step;
}
