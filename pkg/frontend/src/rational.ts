/**
 * The API encodes exact rationals as an int, a short decimal number, or a
 * lowest-terms "p/q" string. The client only ever decodes them for display
 * and widget positioning; it never does index arithmetic of its own.
 */

export type Rational = number | string;

export function rationalToNumber(value: Rational): number {
  if (typeof value === 'number') {
    if (!Number.isFinite(value)) throw new Error(`not a finite number: ${value}`);
    return value;
  }
  const text = value.trim();
  const slash = text.indexOf('/');
  if (slash >= 0) {
    const numerator = Number(text.slice(0, slash));
    const denominator = Number(text.slice(slash + 1));
    if (!Number.isFinite(numerator) || !Number.isFinite(denominator) || denominator === 0) {
      throw new Error(`not a rational: ${value}`);
    }
    return numerator / denominator;
  }
  const parsed = Number(text);
  if (text === '' || !Number.isFinite(parsed)) {
    throw new Error(`not a rational: ${value}`);
  }
  return parsed;
}

export function decodeWeightMap(weights: Record<string, Rational>): Map<number, number> {
  const decoded = new Map<number, number>();
  for (const [key, value] of Object.entries(weights)) {
    decoded.set(Number(key), rationalToNumber(value));
  }
  return decoded;
}
