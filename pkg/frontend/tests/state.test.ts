import { expect, test } from "vitest";

import type {
  Classification,
  ClassificationResponse,
  DocResponse,
  EditProposal,
  SchemaPayload,
  TrailEntry,
} from "../src/api.js";
import {
  applyMutation,
  atEnd,
  badgeText,
  badgeTone,
  hoverProposal,
  initialState,
  openDocument,
  parseTrailString,
  rewind,
  seek,
  setClassification,
  setProposals,
  setTrail,
  stepBack,
  stepForward,
  trailSteps,
} from "../src/state.js";

const typeI: Classification = {
  type: "I",
  odd: [],
  degrees: { A: 2, B: 2, C: 2 },
  feasible_starts: ["A", "B", "C"],
};

const typeII: Classification = {
  type: "II",
  odd: ["B", "E"],
  degrees: { A: 2, B: 3, C: 2, D: 2, E: 3 },
  feasible_starts: ["B", "E"],
  endpoints: ["B", "E"],
};

const typeIII: Classification = {
  type: "III",
  odd: ["A", "B", "C", "D"],
  degrees: { A: 3, B: 3, C: 3, D: 3 },
  feasible_starts: [],
  reason: "odd_count",
};

const payload: SchemaPayload = {
  vertices: [
    { id: "A", label: "A" },
    { id: "B", label: "B" },
  ],
  edges: [{ id: 1, ends: ["A", "B"] }],
  positions: { A: [0, 0], B: [1, 0] },
  styles: { "1": "step" },
};

const doc: DocResponse = {
  doc_id: "doc-1",
  revision: 0,
  kind: "schema",
  payload,
};

const circuit: TrailEntry = {
  trail: "A1D6C5B4A3B2A",
  start: "A",
  end: "A",
  is_circuit: true,
};

test("trail strings split into vertex and edge runs", () => {
  expect(parseTrailString("A1D6C5B4A3B2A")).toEqual({
    vertices: ["A", "D", "C", "B", "A", "B", "A"],
    edges: [1, 6, 5, 4, 3, 2],
  });
  // multi-letter regions and multi-digit bridges stay whole tokens
  expect(parseTrailString("AB12CD3EF")).toEqual({
    vertices: ["AB", "CD", "EF"],
    edges: [12, 3],
  });
  expect(parseTrailString("A")).toEqual({ vertices: ["A"], edges: [] });
});

test("trailSteps counts edges, not vertices", () => {
  expect(trailSteps(null)).toBe(0);
  expect(trailSteps(circuit)).toBe(6);
});

test("badge text covers all verdict shapes", () => {
  expect(badgeText(null)).toBe("unclassified");
  expect(badgeText(typeI)).toBe("Type I");
  expect(badgeText({ ...typeI, degenerate: true })).toBe("Type I (degenerate)");
  expect(badgeText(typeII)).toBe("Type II {B,E}");
  expect(badgeText(typeIII)).toBe("Type III");
  expect(badgeText({ ...typeIII, reason: "disconnected" })).toBe(
    "Type III (disconnected)",
  );
});

test("badge tone tracks the verdict", () => {
  expect(badgeTone(null)).toBe("none");
  expect(badgeTone(typeI)).toBe("go");
  expect(badgeTone(typeII)).toBe("bound");
  expect(badgeTone(typeIII)).toBe("stop");
});

test("opening a document drops per-document extras", () => {
  let s = initialState();
  s = setTrail(s, circuit);
  s = stepForward(s);
  s = setProposals(s, [
    {
      edit: { kind: "add", add: ["A", "B"] },
      resulting_type: "II",
      feasible_starts: ["A", "B"],
      degenerate: false,
    },
  ]);
  s = hoverProposal(s, 0);

  const next = openDocument(s, doc);
  expect(next.docId).toBe("doc-1");
  expect(next.revision).toBe(0);
  expect(next.kind).toBe("schema");
  expect(next.payload).toBe(payload);
  expect(next.classification).toBeNull();
  expect(next.proposals).toEqual([]);
  expect(next.hovered).toBeNull();
  expect(next.trail).toBeNull();
  expect(next.cursor).toBe(0);
});

test("setClassification records verdict and revision", () => {
  const resp: ClassificationResponse = {
    doc_id: "doc-1",
    revision: 3,
    classification: typeII,
  };
  const s = setClassification(openDocument(initialState(), doc), resp);
  expect(s.revision).toBe(3);
  expect(s.classification).toEqual(typeII);
  expect(s.status).toBe("Type II {B,E}");
});

test("applyMutation refreshes badge in one round-trip and drops stale extras", () => {
  let s = openDocument(initialState(), doc);
  s = setClassification(s, { doc_id: "doc-1", revision: 0, classification: typeIII });
  s = setTrail(s, circuit);
  s = setProposals(s, []);

  const next = applyMutation(s, {
    doc_id: "doc-1",
    revision: 1,
    classification: typeII,
  });
  expect(next.revision).toBe(1);
  expect(badgeText(next.classification)).toBe("Type II {B,E}");
  expect(next.trail).toBeNull();
  expect(next.proposals).toEqual([]);
  // payload untouched unless the caller passes a fresh one
  expect(next.payload).toBe(payload);

  const fresh = { ...payload, edges: [] };
  expect(applyMutation(s, { doc_id: "doc-1", revision: 1, classification: typeII }, fresh).payload).toBe(fresh);
});

test("hover index is clamped to the proposal list", () => {
  const proposals: EditProposal[] = [
    {
      edit: { kind: "remove", remove: 1 },
      resulting_type: "I",
      feasible_starts: ["A"],
      degenerate: false,
    },
  ];
  const s = setProposals(initialState(), proposals);
  expect(hoverProposal(s, 0).hovered).toBe(0);
  expect(hoverProposal(s, 1).hovered).toBeNull();
  expect(hoverProposal(s, -1).hovered).toBeNull();
  expect(hoverProposal(s, null).hovered).toBeNull();
});

test("playback cursor clamps at both ends", () => {
  let s = setTrail(initialState(), circuit);
  expect(s.cursor).toBe(0);
  expect(atEnd(s)).toBe(false);

  s = stepBack(s);
  expect(s.cursor).toBe(0);

  for (let i = 0; i < 10; i += 1) s = stepForward(s);
  expect(s.cursor).toBe(6);
  expect(atEnd(s)).toBe(true);

  s = seek(s, 2);
  expect(s.cursor).toBe(2);
  s = seek(s, 99);
  expect(s.cursor).toBe(6);

  s = rewind(s);
  expect(s.cursor).toBe(0);
});

test("a trail-less state is already at the end", () => {
  expect(atEnd(initialState())).toBe(true);
});
