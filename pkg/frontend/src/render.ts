// SVG rendering of the floor: vertices, edges (with parallel-edge
// fanning and self-loops), trail playback highlighting, and ghost
// previews of hovered what-if edits. Pure string producers; main.ts
// owns the DOM.

import type {
  DocumentPayload,
  EdgeEditWire,
  GraphEdge,
  MapPayload,
  SchemaPayload,
} from "./api.js";
import type { EditorState } from "./state.js";
import { parseTrailString } from "./state.js";

type Point = [number, number];

function isMap(payload: DocumentPayload): payload is MapPayload {
  return "regions" in payload;
}

function centroid(points: [number, number][]): Point {
  let x = 0;
  let y = 0;
  for (const [px, py] of points) {
    x += px;
    y += py;
  }
  return [x / points.length, y / points.length];
}

/** Vertex positions for any payload; maps fall back to polygon centres. */
export function layout(payload: DocumentPayload): Record<string, Point> {
  if (!isMap(payload)) {
    const schema = payload as SchemaPayload;
    const out: Record<string, Point> = {};
    for (const [v, [x, y]] of Object.entries(schema.positions)) out[v] = [x, y];
    return out;
  }
  const out: Record<string, Point> = {};
  payload.regions.forEach((r, i) => {
    out[r.id] = r.polygon ? centroid(r.polygon) : [Math.cos(i), Math.sin(i)];
  });
  return out;
}

export function edgesOf(payload: DocumentPayload): GraphEdge[] {
  return isMap(payload) ? payload.bridges : payload.edges;
}

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

interface EdgeGeometry {
  id: number;
  path: string;
  labelAt: Point;
}

function edgePath(a: Point, b: Point, lane: number): { d: string; mid: Point } {
  if (a[0] === b[0] && a[1] === b[1]) {
    // self-loop: a small circle hung off the vertex, one ring per lane
    const r = 0.25 + 0.12 * lane;
    const d =
      `M ${a[0]} ${a[1] - 0.05} ` +
      `a ${r} ${r} 0 1 1 0 ${-2 * r} a ${r} ${r} 0 1 1 0 ${2 * r}`;
    return { d, mid: [a[0], a[1] - 2 * r - 0.12] };
  }
  const mx = (a[0] + b[0]) / 2;
  const my = (a[1] + b[1]) / 2;
  const dx = b[0] - a[0];
  const dy = b[1] - a[1];
  const len = Math.hypot(dx, dy) || 1;
  // fan parallels out perpendicular to the edge
  const off = 0.3 * lane;
  const cx = mx + (-dy / len) * off;
  const cy = my + (dx / len) * off;
  return {
    d: `M ${a[0]} ${a[1]} Q ${cx} ${cy} ${b[0]} ${b[1]}`,
    mid: [(mx + cx) / 2, (my + cy) / 2],
  };
}

function buildEdgeGeometry(
  edges: GraphEdge[],
  pos: Record<string, Point>,
): EdgeGeometry[] {
  const laneOf = new Map<number, number>();
  const groups = new Map<string, number[]>();
  for (const e of edges) {
    const key = [...e.ends].sort().join("|");
    const group = groups.get(key) ?? [];
    group.push(e.id);
    groups.set(key, group);
  }
  for (const group of groups.values()) {
    group.sort((a, b) => a - b);
    group.forEach((id, i) => laneOf.set(id, i - (group.length - 1) / 2));
  }
  const out: EdgeGeometry[] = [];
  for (const e of edges) {
    const a = pos[e.ends[0]];
    const b = pos[e.ends[1]];
    if (!a || !b) continue;
    const lane = laneOf.get(e.id) ?? 0;
    const { d, mid } = edgePath(a, b, lane);
    out.push({ id: e.id, path: d, labelAt: mid });
  }
  return out;
}

function ghostMarkup(
  edit: EdgeEditWire,
  pos: Record<string, Point>,
  edges: GraphEdge[],
): string {
  const parts: string[] = [];
  if (edit.kind !== "add") {
    const gone = edges.find((e) => e.id === edit.remove);
    if (gone) {
      const a = pos[gone.ends[0]];
      const b = pos[gone.ends[1]];
      if (a && b) {
        const { d } = edgePath(a, b, 0);
        parts.push(`<path class="ghost-remove" d="${d}" />`);
      }
    }
  }
  if (edit.kind !== "remove") {
    const a = pos[edit.add[0]];
    const b = pos[edit.add[1]];
    if (a && b) {
      const { d } = edgePath(a, b, edit.add[0] === edit.add[1] ? 1 : 0.8);
      parts.push(`<path class="ghost-add" d="${d}" />`);
    }
  }
  return parts.join("");
}

/** The whole stage as an SVG string for the current editor state. */
export function renderStage(state: EditorState): string {
  if (!state.payload) {
    return `<svg viewBox="0 0 10 4"><text x="5" y="2" class="empty">open a document</text></svg>`;
  }
  const payload = state.payload;
  const pos = layout(payload);
  const edges = edgesOf(payload);
  const points = Object.values(pos);
  const xs = points.map((p) => p[0]);
  const ys = points.map((p) => p[1]);
  const pad = 1.2;
  const minX = Math.min(...xs, 0) - pad;
  const minY = Math.min(...ys, 0) - pad;
  const w = Math.max(...xs, 1) - minX + pad;
  const h = Math.max(...ys, 1) - minY + pad;

  const danced = new Set<number>();
  let dancerAt: string | null = null;
  if (state.trail) {
    const parsed = parseTrailString(state.trail.trail);
    parsed.edges.slice(0, state.cursor).forEach((e) => danced.add(e));
    dancerAt = parsed.vertices[state.cursor] ?? null;
  }

  const chunks: string[] = [];
  if (isMap(payload)) {
    for (const r of payload.regions) {
      if (!r.polygon) continue;
      const pts = r.polygon.map(([x, y]) => `${x},${y}`).join(" ");
      chunks.push(`<polygon class="region" points="${pts}" />`);
    }
  }
  for (const g of buildEdgeGeometry(edges, pos)) {
    const cls = danced.has(g.id) ? "edge danced" : "edge";
    chunks.push(`<path class="${cls}" data-edge="${g.id}" d="${g.path}" />`);
    chunks.push(
      `<text class="edge-label" x="${g.labelAt[0]}" y="${g.labelAt[1]}">${g.id}</text>`,
    );
  }
  const hoveredProposal =
    state.hovered !== null ? state.proposals[state.hovered] : undefined;
  if (hoveredProposal) {
    chunks.push(ghostMarkup(hoveredProposal.edit, pos, edges));
  }
  for (const [v, [x, y]] of Object.entries(pos)) {
    const here = dancerAt === v;
    chunks.push(`<circle class="vertex${here ? " dancer" : ""}" cx="${x}" cy="${y}" r="0.28" data-vertex="${esc(v)}" />`);
    chunks.push(`<text class="vertex-label" x="${x}" y="${y}">${esc(v)}</text>`);
  }
  return (
    `<svg viewBox="${minX} ${minY} ${w} ${h}" preserveAspectRatio="xMidYMid meet">` +
    `<g transform="translate(0,0)">${chunks.join("")}</g></svg>`
  );
}

/** One proposal as a short human line, mirroring the CLI's phrasing. */
export function proposalLine(edit: EdgeEditWire, resultingType: string): string {
  if (edit.kind === "add") {
    return `add ${edit.add[0]}-${edit.add[1]} -> Type ${resultingType}`;
  }
  if (edit.kind === "remove") {
    return `remove ${edit.remove} -> Type ${resultingType}`;
  }
  return `move ${edit.remove} to ${edit.add[0]}-${edit.add[1]} -> Type ${resultingType}`;
}
