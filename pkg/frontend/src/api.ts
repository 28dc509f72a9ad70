// Typed fetch client for the engine's HTTP document API.
//
// Every method returns parsed JSON; non-2xx responses become
// EngineApiError carrying the machine-readable code the server sent
// ({code, reason} bodies), so UI code can branch on "revision_conflict"
// or "disconnects" without string-matching prose.

export type EulerType = "I" | "II" | "III";

export interface Classification {
  type: EulerType;
  odd: string[];
  degrees: Record<string, number>;
  feasible_starts: string[];
  endpoints?: [string, string];
  reason?: "odd_count" | "disconnected";
  degenerate?: boolean;
}

export interface GraphVertex {
  id: string;
  label: string;
}

export interface GraphEdge {
  id: number;
  ends: [string, string];
}

export interface SchemaPayload {
  vertices: GraphVertex[];
  edges: GraphEdge[];
  positions: Record<string, [number, number]>;
  styles: Record<string, string>;
  name?: string;
}

export interface MapRegion {
  id: string;
  label: string;
  polygon?: [number, number][];
}

export interface MapPayload {
  name: string;
  regions: MapRegion[];
  bridges: GraphEdge[];
}

export type DocumentKind = "schema" | "map";
export type DocumentPayload = SchemaPayload | MapPayload;

export interface DocResponse {
  doc_id: string;
  revision: number;
  kind: DocumentKind;
  payload: DocumentPayload;
}

export interface CreateResponse {
  doc_id: string;
  revision: number;
}

export interface ClassificationResponse {
  doc_id: string;
  revision: number;
  classification: Classification;
}

export type EdgeEditWire =
  | { kind: "add"; add: [string, string] }
  | { kind: "remove"; remove: number }
  | { kind: "move"; remove: number; add: [string, string] };

export interface EditProposal {
  edit: EdgeEditWire;
  resulting_type: EulerType;
  feasible_starts: string[];
  degenerate: boolean;
}

export interface EditSearchResponse {
  doc_id: string;
  revision: number;
  target: EulerType;
  count: number;
  proposals: EditProposal[];
  rejected: { edit: EdgeEditWire; reason: string }[];
}

export interface TrailEntry {
  trail: string;
  start: string;
  end: string;
  is_circuit: boolean;
  styles?: string[];
  beats?: number[];
}

export interface TrailsResponse {
  doc_id: string;
  revision: number;
  count: number;
  trails: TrailEntry[];
  classification: Classification;
}

export interface AtlasIndex {
  maps: string[];
  schemas: string[];
}

export interface AtlasEntry {
  name: string;
  kind: DocumentKind;
  payload: DocumentPayload;
  classification: Classification;
}

export interface ValidateResponse {
  status: "eulerian" | "well_formed" | "invalid";
  is_circuit: boolean;
  violations: { kind: string; [key: string]: unknown }[];
  doc_id: string;
}

export class EngineApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    reason: string,
  ) {
    super(reason);
    this.name = "EngineApiError";
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const resp = await fetch(url, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  const body = await resp.json().catch(() => ({}));
  if (!resp.ok) {
    const code = typeof body?.code === "string" ? body.code : "http_error";
    const reason =
      typeof body?.reason === "string" ? body.reason : `HTTP ${resp.status}`;
    throw new EngineApiError(resp.status, code, reason);
  }
  return body as T;
}

export class EngineClient {
  constructor(readonly baseUrl: string) {}

  private url(path: string): string {
    return `${this.baseUrl.replace(/\/$/, "")}${path}`;
  }

  atlas(): Promise<AtlasIndex> {
    return request(this.url("/atlas"));
  }

  atlasEntry(name: string): Promise<AtlasEntry> {
    return request(this.url(`/atlas/${encodeURIComponent(name)}`));
  }

  createDoc(payload: DocumentPayload | object): Promise<CreateResponse> {
    return request(this.url("/docs"), {
      method: "POST",
      body: JSON.stringify(payload),
    });
  }

  getDoc(docId: string): Promise<DocResponse> {
    return request(this.url(`/docs/${docId}`));
  }

  getClassification(docId: string): Promise<ClassificationResponse> {
    return request(this.url(`/docs/${docId}/classification`));
  }

  patchDoc(
    docId: string,
    revision: number,
    edit: EdgeEditWire,
    style?: string,
  ): Promise<ClassificationResponse> {
    return request(this.url(`/docs/${docId}`), {
      method: "PATCH",
      body: JSON.stringify(style ? { revision, edit, style } : { revision, edit }),
    });
  }

  trails(
    docId: string,
    opts: {
      start?: string;
      all?: boolean;
      limit?: number;
      beats_per_step?: number;
    } = {},
  ): Promise<TrailsResponse> {
    return request(this.url(`/docs/${docId}/trails`), {
      method: "POST",
      body: JSON.stringify(opts),
    });
  }

  editSearch(
    docId: string,
    op: "add" | "remove" | "move",
    target: EulerType,
  ): Promise<EditSearchResponse> {
    return request(
      this.url(`/docs/${docId}/edits?op=${op}&target=${target}`),
      { method: "POST" },
    );
  }

  validate(trail: string, docId: string): Promise<ValidateResponse> {
    return request(this.url("/validate"), {
      method: "POST",
      body: JSON.stringify({ trail, doc_id: docId }),
    });
  }
}
