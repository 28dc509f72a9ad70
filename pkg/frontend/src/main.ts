// Studio wiring: one EngineClient, one EditorState, re-render on change.

import { EngineClient, EngineApiError } from "./api.js";
import type { EdgeEditWire, EulerType } from "./api.js";
import {
  applyMutation,
  atEnd,
  badgeText,
  badgeTone,
  hoverProposal,
  initialState,
  openDocument,
  rewind,
  setClassification,
  setProposals,
  setTrail,
  stepBack,
  stepForward,
} from "./state.js";
import type { EditorState } from "./state.js";
import { proposalLine, renderStage } from "./render.js";

const API_BASE =
  new URLSearchParams(location.search).get("api") ?? "http://127.0.0.1:8000";

const client = new EngineClient(API_BASE);
let state: EditorState = initialState();

const $ = <T extends HTMLElement>(sel: string): T => {
  const el = document.querySelector<T>(sel);
  if (!el) throw new Error(`missing element ${sel}`);
  return el;
};

const stage = $("#stage");
const badge = $("#badge");
const statusBar = $("#status");
const atlasSelect = $<HTMLSelectElement>("#atlas-select");
const opSelect = $<HTMLSelectElement>("#op-select");
const targetSelect = $<HTMLSelectElement>("#target-select");
const proposalsList = $("#proposals");

function update(next: EditorState): void {
  state = next;
  stage.innerHTML = renderStage(state);
  badge.textContent = badgeText(state.classification);
  badge.dataset.tone = badgeTone(state.classification);
  statusBar.textContent = state.status;
  renderProposals();
}

function renderProposals(): void {
  proposalsList.innerHTML = "";
  state.proposals.forEach((p, i) => {
    const li = document.createElement("li");
    li.textContent = proposalLine(p.edit, p.resulting_type);
    if (p.degenerate) li.classList.add("degenerate");
    li.addEventListener("mouseenter", () => update(hoverProposal(state, i)));
    li.addEventListener("mouseleave", () => update(hoverProposal(state, null)));
    li.addEventListener("click", () => void applyProposal(p.edit));
    proposalsList.appendChild(li);
  });
}

function report(err: unknown): void {
  const text =
    err instanceof EngineApiError ? `${err.code}: ${err.message}` : String(err);
  update({ ...state, status: text });
}

async function refreshDocument(docId: string): Promise<void> {
  const doc = await client.getDoc(docId);
  const verdict = await client.getClassification(docId);
  update(setClassification(openDocument(state, doc), verdict));
}

async function openFromAtlas(name: string): Promise<void> {
  const entry = await client.atlasEntry(name);
  const created = await client.createDoc(entry.payload);
  await refreshDocument(created.doc_id);
}

async function applyProposal(edit: EdgeEditWire): Promise<void> {
  if (!state.docId) return;
  const resp = await client.patchDoc(state.docId, state.revision, edit);
  // the PATCH reply alone refreshes the badge; payload follows after
  update(applyMutation(state, resp));
  const doc = await client.getDoc(state.docId);
  update({ ...state, payload: doc.payload });
}

async function searchEdits(): Promise<void> {
  if (!state.docId) return;
  const op = opSelect.value as "add" | "remove" | "move";
  const target = targetSelect.value as EulerType;
  const found = await client.editSearch(state.docId, op, target);
  update(setProposals(state, found.proposals));
}

async function solve(): Promise<void> {
  if (!state.docId) return;
  const resp = await client.trails(state.docId, {});
  update(setTrail(state, resp.trails[0] ?? null));
}

async function boot(): Promise<void> {
  const index = await client.atlas();
  for (const name of [...index.maps, ...index.schemas]) {
    const opt = document.createElement("option");
    opt.value = name;
    opt.textContent = name;
    atlasSelect.appendChild(opt);
  }
  $("#open").addEventListener("click", () =>
    openFromAtlas(atlasSelect.value).catch(report),
  );
  $("#solve").addEventListener("click", () => solve().catch(report));
  $("#search").addEventListener("click", () => searchEdits().catch(report));
  $("#step-fwd").addEventListener("click", () => update(stepForward(state)));
  $("#step-back").addEventListener("click", () => update(stepBack(state)));
  $("#rewind").addEventListener("click", () => update(rewind(state)));
  $("#play").addEventListener("click", () => {
    const tick = () => {
      if (atEnd(state)) return;
      update(stepForward(state));
      window.setTimeout(tick, 450);
    };
    tick();
  });
  update(state);
}

boot().catch(report);
