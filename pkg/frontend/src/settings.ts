// Local persistence of the answers-per-question setting.

export interface StorageLike {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
}

const KEY = "leafletqa.top_k";
export const DEFAULT_TOP_K = 3;

export function loadTopK(storage: StorageLike): number {
  const raw = storage.getItem(KEY);
  if (raw === null) return DEFAULT_TOP_K;
  const value = Number.parseInt(raw, 10);
  return Number.isInteger(value) && value >= 1 && value <= 20 ? value : DEFAULT_TOP_K;
}

export function saveTopK(storage: StorageLike, value: number): number {
  const whole = Number.isFinite(value) ? Math.trunc(value) : DEFAULT_TOP_K;
  const clamped = Math.min(20, Math.max(1, whole));
  storage.setItem(KEY, String(clamped));
  return clamped;
}
