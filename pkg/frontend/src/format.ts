/** Display rounding is fixed at 3 decimals and is presentation-only;
 * tooltips always carry the full-precision value from the API. */

export function fmt(value: number): string {
  return value.toFixed(3);
}

export function full(value: number): string {
  return String(value);
}

export const QUADRANT_NAMES: Record<string, string> = {
  amplified_conformist: "Amplified Conformist",
  smoothed_conformist: "Smoothed Conformist",
  polarized_maverick: "Polarized Maverick",
  muted_maverick: "Muted Maverick",
};

export function quadrantName(code: string): string {
  return QUADRANT_NAMES[code] ?? code;
}
