// Display formatting. The UI never computes physics, it only formats what
// the service returned; unit conversion for display is the one exception.

export function formatMeters(value: number): string {
  return value.toFixed(2);
}

export function formatArea(value: number): string {
  return value.toFixed(2);
}

export function formatVolume(value: number): string {
  return value.toFixed(2);
}

/** Compactness ratios carry 4 decimals: near-optimal designs are
 * indistinguishable from 1 at 2 decimals. */
export function formatRatio(value: number): string {
  return value.toFixed(4);
}

export function formatDegrees(value: number): string {
  return value.toFixed(1);
}

/** Parse a text input as a finite positive number, else null. */
export function parsePositive(raw: string): number | null {
  const value = Number(raw);
  if (!Number.isFinite(value) || value <= 0) return null;
  return value;
}

export function parseAngleDeg(raw: string): number | null {
  const value = Number(raw);
  if (!Number.isFinite(value) || value <= 0 || value >= 90) return null;
  return value;
}
