import { ApiClient, ApiError, ConnectionError } from "./api.js";
import { Debouncer } from "./debounce.js";
import { RequestGate } from "./sequencer.js";
import { ExplorerState, type Mode } from "./state.js";
import { nearestContourVertex } from "./contours.js";
import {
  formatArea,
  formatMeters,
  formatRatio,
  formatVolume,
  parseAngleDeg,
  parsePositive,
} from "./format.js";
import { drawContours, drawField, drawMarker, drawUserPoint, makeTransform } from "./render.js";

const api = new ApiClient("");
const state = new ExplorerState();
const assessGate = new RequestGate();
const mapGate = new RequestGate();
const debouncer = new Debouncer(150);

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

const canvas = $<HTMLCanvasElement>("map");
const ctx = canvas.getContext("2d")!;
const banner = $<HTMLDivElement>("banner");
const fieldErrors = new Map<string, HTMLElement>();

function showBanner(message: string): void {
  banner.textContent = message;
  banner.style.display = "block";
}

function hideBanner(): void {
  banner.style.display = "none";
}

function inlineError(field: string | null, message: string): void {
  const target = field ? fieldErrors.get(field) : undefined;
  if (target) {
    target.textContent = message;
    target.style.display = "block";
  } else {
    showBanner(message);
  }
}

function clearInlineErrors(): void {
  fieldErrors.forEach((el) => {
    el.style.display = "none";
  });
}

// --- numeric panel ----------------------------------------------------------

function renderPanel(): void {
  const report = state.lastAssess;
  if (!report) return;
  const c = report.compactness;
  const f = report.fixed_floor;
  $("out-S").textContent = formatArea(c.S);
  $("out-V").textContent = formatVolume(c.V);
  $("out-F").textContent = formatArea(c.design.F);
  $("out-smin-v").textContent = formatArea(c.S_min);
  $("out-smin-f").textContent = formatArea(f.optimum.S_min);
  $("out-ratio-v").textContent = formatRatio(c.ratio);
  $("out-ratio-f").textContent = formatRatio(f.ratio);
  $("out-headroom-v").textContent = formatArea(c.headroom);
  $("out-headroom-f").textContent = formatArea(f.headroom);
  $("out-opt-v").textContent =
    `W ${formatMeters(c.optimum.W_min)}  L ${formatMeters(c.optimum.L_min)}  ` +
    `H ${formatMeters(c.optimum.H_min)} m`;
  $("out-opt-f").textContent =
    `W ${formatMeters(f.optimum.W_min)}  L ${formatMeters(f.optimum.L_min)} m ` +
    `(H, alpha fixed)`;
}

// --- contour map ------------------------------------------------------------

async function refreshMap(): Promise<void> {
  const seq = mapGate.next();
  const key = state.cacheKey();
  let bundle = state.cachedBundle();
  if (!bundle) {
    try {
      const req = {
        alphaDeg: state.alphaDeg,
        rmin: state.range.rmin,
        rmax: state.range.rmax,
        kmin: state.range.kmin,
        kmax: state.range.kmax,
        res: state.resolution,
      };
      const [field, contours] = await Promise.all([
        api.compactnessField(req),
        api.contours(req, state.levels),
      ]);
      bundle = state.storeBundle(key, { field, contours });
    } catch (err) {
      handleFailure(err);
      return;
    }
  }
  if (!mapGate.accept(seq)) return; // superseded while fetching
  drawMap();
}

function drawMap(): void {
  const bundle = state.cachedBundle();
  if (!bundle) return;
  const { width, height } = canvas;
  ctx.clearRect(0, 0, width, height);
  drawField(ctx, bundle.field, state.range, width, height);
  drawContours(ctx, bundle.contours, state.range, width, height);
  if (bundle.field.marker) drawMarker(ctx, bundle.field.marker, state.range, width, height);
  const design = state.lastAssess?.compactness.design;
  if (design) drawUserPoint(ctx, design.r, design.k, state.range, width, height);
}

// --- assessment loop --------------------------------------------------------

function scheduleAssess(): void {
  debouncer.schedule(() => void runAssess());
}

async function runAssess(): Promise<void> {
  clearInlineErrors();
  const seq = assessGate.next();
  try {
    let report;
    if (state.mode === "fixed-volume") {
      const opt = await api.optimizeVolume(state.volumeTarget.V, state.volumeTarget.alphaDeg);
      state.lastVolumeOpt = opt;
      report = await api.assess({
        W: opt.W_min,
        L: opt.L_min,
        H: opt.H_min,
        alpha_deg: opt.alpha_deg,
      });
    } else if (state.mode === "fixed-floor") {
      const opt = await api.optimizeFloor(
        state.floorTarget.F,
        state.floorTarget.H,
        state.floorTarget.alphaDeg,
      );
      state.lastFloorOpt = opt;
      report = await api.assess({
        W: opt.W_min,
        L: opt.L_min,
        H: opt.height,
        alpha_deg: opt.alpha_deg,
      });
    } else {
      report = await api.assess({
        W: state.design.W,
        L: state.design.L,
        H: state.design.H,
        alpha_deg: state.design.alphaDeg,
      });
    }
    if (!assessGate.accept(seq)) return; // stale response discarded
    hideBanner();
    state.acceptAssess(report);
    renderPanel();
    void refreshMap();
  } catch (err) {
    if (!assessGate.accept(seq)) return;
    handleFailure(err);
  }
}

/** Drag interaction: snap to the nearest server-provided contour vertex and
 * re-assess at that (r, k) with the current volume, so the shown ratio always
 * comes from the service. */
async function assessAtRatios(r: number, k: number): Promise<void> {
  const current = state.lastAssess;
  if (!current) return;
  const seq = assessGate.next();
  try {
    const report = await api.assess({
      r,
      k,
      V: current.compactness.V,
      alpha_deg: current.compactness.design.alpha_deg,
    });
    if (!assessGate.accept(seq)) return;
    const d = report.compactness.design;
    state.design = { W: d.W, L: d.L, H: d.H, alphaDeg: d.alpha_deg };
    syncInputsFromState();
    state.acceptAssess(report);
    renderPanel();
    drawMap();
  } catch (err) {
    if (!assessGate.accept(seq)) return;
    handleFailure(err);
  }
}

function handleFailure(err: unknown): void {
  if (err instanceof ApiError) {
    inlineError(err.body.field, `${err.body.code}: ${err.body.message}`);
  } else if (err instanceof ConnectionError) {
    showBanner("Service unreachable. Retrying on next edit; check `barnopt serve`.");
  } else {
    showBanner(String(err));
  }
}

// --- input wiring -----------------------------------------------------------

interface Binding {
  id: string;
  apply(value: number): void;
  parse(raw: string): number | null;
}

const bindings: Binding[] = [
  { id: "in-W", parse: parsePositive, apply: (v) => (state.design.W = v) },
  { id: "in-L", parse: parsePositive, apply: (v) => (state.design.L = v) },
  { id: "in-H", parse: parsePositive, apply: (v) => (state.design.H = v) },
  { id: "in-alpha", parse: parseAngleDeg, apply: (v) => (state.design.alphaDeg = v) },
  { id: "in-V", parse: parsePositive, apply: (v) => (state.volumeTarget.V = v) },
  { id: "in-valpha", parse: parseAngleDeg, apply: (v) => (state.volumeTarget.alphaDeg = v) },
  { id: "in-F", parse: parsePositive, apply: (v) => (state.floorTarget.F = v) },
  { id: "in-FH", parse: parsePositive, apply: (v) => (state.floorTarget.H = v) },
  { id: "in-falpha", parse: parseAngleDeg, apply: (v) => (state.floorTarget.alphaDeg = v) },
];

function syncInputsFromState(): void {
  ($("in-W") as HTMLInputElement).value = String(state.design.W);
  ($("in-L") as HTMLInputElement).value = String(state.design.L);
  ($("in-H") as HTMLInputElement).value = String(state.design.H);
  ($("in-alpha") as HTMLInputElement).value = String(state.design.alphaDeg);
}

function wireInputs(): void {
  for (const binding of bindings) {
    const el = $(binding.id) as HTMLInputElement;
    const errEl = document.getElementById(`${binding.id}-error`);
    if (errEl) {
      const name = binding.id.replace("in-", "");
      fieldErrors.set(name === "valpha" || name === "falpha" ? "alpha_deg" : name, errEl);
    }
    el.addEventListener("input", () => {
      const value = binding.parse(el.value);
      if (value === null) return; // leave last valid state; server guards anyway
      binding.apply(value);
      scheduleAssess();
    });
  }

  document.querySelectorAll<HTMLButtonElement>("[data-mode]").forEach((button) => {
    button.addEventListener("click", () => {
      state.mode = button.dataset.mode as Mode;
      document.querySelectorAll(".mode-panel").forEach((panel) => {
        (panel as HTMLElement).style.display =
          panel.id === `panel-${state.mode}` ? "block" : "none";
      });
      document
        .querySelectorAll("[data-mode]")
        .forEach((b) => b.classList.toggle("active", b === button));
      scheduleAssess();
    });
  });

  $("apply-optimum").addEventListener("click", () => {
    if (state.applyOptimum()) {
      syncInputsFromState();
      document.querySelectorAll(".mode-panel").forEach((panel) => {
        (panel as HTMLElement).style.display = panel.id === "panel-assess" ? "block" : "none";
      });
      scheduleAssess();
    }
  });

  $("levels").addEventListener("change", () => {
    const raw = ($("levels") as HTMLInputElement).value;
    const parsed = raw
      .split(",")
      .map((part) => Number(part.trim()))
      .filter((v) => Number.isFinite(v) && v >= 1);
    if (parsed.length > 0) {
      state.levels = parsed.sort((a, b) => a - b);
      void refreshMap();
    }
  });
}

function wireDrag(): void {
  let dragging = false;
  canvas.addEventListener("pointerdown", (event) => {
    dragging = true;
    canvas.setPointerCapture(event.pointerId);
  });
  canvas.addEventListener("pointerup", () => {
    dragging = false;
  });
  canvas.addEventListener("pointermove", (event) => {
    if (!dragging) return;
    const bundle = state.cachedBundle();
    if (!bundle) return;
    const rect = canvas.getBoundingClientRect();
    const t = makeTransform(state.range, canvas.width, canvas.height);
    const [r, k] = t.toData(
      ((event.clientX - rect.left) / rect.width) * canvas.width,
      ((event.clientY - rect.top) / rect.height) * canvas.height,
    );
    if (r <= 0 || k <= 0) return;
    // Snap to a level curve when close; free exploration otherwise.
    const snap = nearestContourVertex(r, k, bundle.contours);
    const span = Math.min(
      state.range.rmax - state.range.rmin,
      state.range.kmax - state.range.kmin,
    );
    const target = snap && snap.distance < 0.03 * span ? { r: snap.r, k: snap.k } : { r, k };
    debouncer.schedule(() => void assessAtRatios(target.r, target.k));
  });
}

async function boot(): Promise<void> {
  wireInputs();
  wireDrag();
  try {
    await api.health();
    hideBanner();
  } catch {
    showBanner("Service unreachable. Start it with `barnopt serve --ui-dir frontend/dist`.");
  }
  await runAssess();
}

void boot();
