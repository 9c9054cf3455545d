// Typed client for the question-answering JSON API (same origin).
//
// askQuestion never throws: network failures, non-2xx statuses and
// unexpected payloads all come back as an "error" outcome so the UI can
// always render something.

export interface Answer {
  text: string;
  relevance: number;
  doc_index: number;
}

export interface ClusterMember {
  stem: string;
  membership: number;
}

export interface Cluster {
  index: number;
  center_stem: string;
  potential: number;
  members: ClusterMember[];
}

export type AskOutcome =
  | { kind: "answers"; answers: Answer[] }
  | { kind: "fallback"; message: string }
  | { kind: "error"; message: string };

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

function isAnswer(value: unknown): value is Answer {
  if (typeof value !== "object" || value === null) return false;
  const a = value as Record<string, unknown>;
  return (
    typeof a.text === "string" &&
    typeof a.relevance === "number" &&
    typeof a.doc_index === "number"
  );
}

export async function askQuestion(
  question: string,
  topK: number | null,
  fetchImpl: FetchLike = fetch,
): Promise<AskOutcome> {
  const body: Record<string, unknown> = { question };
  if (topK !== null) body.top_k = topK;

  let response: Response;
  try {
    response = await fetchImpl("/ask", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  } catch {
    return { kind: "error", message: "Could not reach the server." };
  }

  let payload: unknown;
  try {
    payload = await response.json();
  } catch {
    payload = null;
  }

  if (!response.ok) {
    const detail =
      payload && typeof (payload as Record<string, unknown>).error === "string"
        ? ` (${(payload as Record<string, unknown>).error})`
        : "";
    return {
      kind: "error",
      message: `The server answered with status ${response.status}${detail}.`,
    };
  }

  if (payload && typeof payload === "object") {
    const record = payload as Record<string, unknown>;
    if (typeof record.fallback === "string") {
      return { kind: "fallback", message: record.fallback };
    }
    if (Array.isArray(record.answers) && record.answers.every(isAnswer)) {
      return { kind: "answers", answers: record.answers };
    }
  }
  return { kind: "error", message: "The server sent an unexpected response." };
}

export async function fetchClusters(fetchImpl: FetchLike = fetch): Promise<Cluster[]> {
  const response = await fetchImpl("/clusters");
  if (!response.ok) {
    throw new Error(`status ${response.status}`);
  }
  const payload = (await response.json()) as Cluster[];
  if (!Array.isArray(payload)) {
    throw new Error("unexpected /clusters payload");
  }
  return payload;
}
