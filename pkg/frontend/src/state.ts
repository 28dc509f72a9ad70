// Editor state and its pure reducers.
//
// Every transition is a plain function from (state, event payload) to a
// new state object; nothing here touches fetch or the DOM. The verdict
// badge is derived text, recomputed from whichever classification the
// server sent most recently, so one mutation round-trip is always
// enough to refresh it.

import type {
  Classification,
  ClassificationResponse,
  DocResponse,
  DocumentKind,
  DocumentPayload,
  EditProposal,
  TrailEntry,
} from "./api.js";

export interface EditorState {
  docId: string | null;
  revision: number;
  kind: DocumentKind | null;
  payload: DocumentPayload | null;
  classification: Classification | null;
  /** current what-if search results, if any */
  proposals: EditProposal[];
  /** index into proposals being previewed as a ghost edit, or null */
  hovered: number | null;
  /** trail under playback, if any */
  trail: TrailEntry | null;
  /** playback position: number of steps already danced, 0..steps(trail) */
  cursor: number;
  /** one-line status for the footer */
  status: string;
}

export function initialState(): EditorState {
  return {
    docId: null,
    revision: 0,
    kind: null,
    payload: null,
    classification: null,
    proposals: [],
    hovered: null,
    trail: null,
    cursor: 0,
    status: "no document",
  };
}

export interface ParsedTrail {
  vertices: string[];
  edges: number[];
}

/** Split a trail string into its vertex and edge token sequences. */
export function parseTrailString(text: string): ParsedTrail {
  const tokens = text.match(/[A-Z]+|[0-9]+/g) ?? [];
  const vertices: string[] = [];
  const edges: number[] = [];
  for (const tok of tokens) {
    if (/[A-Z]/.test(tok[0] ?? "")) vertices.push(tok);
    else edges.push(Number(tok));
  }
  return { vertices, edges };
}

/** Number of steps in a trail string's playback. */
export function trailSteps(trail: TrailEntry | null): number {
  if (!trail) return 0;
  return parseTrailString(trail.trail).edges.length;
}

/** Badge text for a verdict; the tone drives the badge colour. */
export function badgeText(c: Classification | null): string {
  if (!c) return "unclassified";
  if (c.type === "I") return c.degenerate ? "Type I (degenerate)" : "Type I";
  if (c.type === "II" && c.endpoints) {
    return `Type II {${c.endpoints[0]},${c.endpoints[1]}}`;
  }
  if (c.type === "II") return "Type II";
  return c.reason === "disconnected" ? "Type III (disconnected)" : "Type III";
}

export type BadgeTone = "go" | "bound" | "stop" | "none";

export function badgeTone(c: Classification | null): BadgeTone {
  if (!c) return "none";
  return c.type === "I" ? "go" : c.type === "II" ? "bound" : "stop";
}

/** Load a freshly fetched document, dropping all per-document extras. */
export function openDocument(state: EditorState, doc: DocResponse): EditorState {
  return {
    ...state,
    docId: doc.doc_id,
    revision: doc.revision,
    kind: doc.kind,
    payload: doc.payload,
    classification: null,
    proposals: [],
    hovered: null,
    trail: null,
    cursor: 0,
    status: `opened ${doc.doc_id} (rev ${doc.revision})`,
  };
}

export function setClassification(
  state: EditorState,
  resp: ClassificationResponse,
): EditorState {
  return {
    ...state,
    revision: resp.revision,
    classification: resp.classification,
    status: badgeText(resp.classification),
  };
}

/**
 * Fold in a mutation response. The server's PATCH reply already carries
 * the new revision and verdict, so the badge updates here without a
 * second request; the payload itself is refreshed separately. Trails
 * and proposals refer to the pre-edit floor, so they are dropped.
 */
export function applyMutation(
  state: EditorState,
  resp: ClassificationResponse,
  payload?: DocumentPayload,
): EditorState {
  return {
    ...state,
    revision: resp.revision,
    classification: resp.classification,
    payload: payload ?? state.payload,
    proposals: [],
    hovered: null,
    trail: null,
    cursor: 0,
    status: `rev ${resp.revision}: ${badgeText(resp.classification)}`,
  };
}

export function setPayload(
  state: EditorState,
  payload: DocumentPayload,
): EditorState {
  return { ...state, payload };
}

export function setProposals(
  state: EditorState,
  proposals: EditProposal[],
): EditorState {
  return {
    ...state,
    proposals,
    hovered: null,
    status: `${proposals.length} proposals`,
  };
}

export function hoverProposal(
  state: EditorState,
  index: number | null,
): EditorState {
  const hovered =
    index === null || index < 0 || index >= state.proposals.length
      ? null
      : index;
  return { ...state, hovered };
}

export function setTrail(state: EditorState, trail: TrailEntry | null): EditorState {
  return {
    ...state,
    trail,
    cursor: 0,
    status: trail ? `trail ${trail.trail}` : "no trail",
  };
}

function clampCursor(trail: TrailEntry | null, cursor: number): number {
  return Math.max(0, Math.min(cursor, trailSteps(trail)));
}

export function stepForward(state: EditorState): EditorState {
  return { ...state, cursor: clampCursor(state.trail, state.cursor + 1) };
}

export function stepBack(state: EditorState): EditorState {
  return { ...state, cursor: clampCursor(state.trail, state.cursor - 1) };
}

export function seek(state: EditorState, cursor: number): EditorState {
  return { ...state, cursor: clampCursor(state.trail, cursor) };
}

export function rewind(state: EditorState): EditorState {
  return { ...state, cursor: 0 };
}

export function atEnd(state: EditorState): boolean {
  return state.cursor >= trailSteps(state.trail);
}
