/** Projects the gateway's GeoJSON overlay into SVG primitives.
 *
 * The server owns all geometry; this module only maps [lon, lat] pairs
 * onto the viewport (equirectangular) and tags each primitive with a
 * per-mode style class so highway and rail legs render distinctly.
 */

import type { GeoJsonCollection, GeoJsonPosition } from './types.js';

export interface MapLine {
  kind: 'line';
  points: Array<[number, number]>;
  className: string;
  label: string;
}

export interface MapMarker {
  kind: 'marker';
  x: number;
  y: number;
  className: string;
  label: string;
}

export type MapPrimitive = MapLine | MapMarker;

export const MODE_CLASSES: Record<string, string> = {
  Highway: 'leg-highway',
  Rail: 'leg-rail',
  Water: 'leg-water',
};

interface Projection {
  x(lon: number): number;
  y(lat: number): number;
}

function fitProjection(positions: GeoJsonPosition[], width: number, height: number, pad: number): Projection {
  const lons = positions.map((p) => p[0]);
  const lats = positions.map((p) => p[1]);
  const minLon = Math.min(...lons);
  const maxLon = Math.max(...lons);
  const minLat = Math.min(...lats);
  const maxLat = Math.max(...lats);
  const spanLon = Math.max(maxLon - minLon, 1e-6);
  const spanLat = Math.max(maxLat - minLat, 1e-6);
  const scale = Math.min((width - 2 * pad) / spanLon, (height - 2 * pad) / spanLat);
  return {
    x: (lon) => pad + (lon - minLon) * scale,
    y: (lat) => height - pad - (lat - minLat) * scale, // lat grows upward
  };
}

export function projectOverlay(
  collection: GeoJsonCollection,
  width = 720,
  height = 420,
  pad = 24,
): MapPrimitive[] {
  const positions: GeoJsonPosition[] = [];
  for (const feature of collection.features) {
    if (feature.geometry.type === 'LineString') {
      positions.push(...feature.geometry.coordinates);
    } else {
      positions.push(feature.geometry.coordinates);
    }
  }
  if (positions.length === 0) {
    return [];
  }
  const proj = fitProjection(positions, width, height, pad);
  const out: MapPrimitive[] = [];
  for (const feature of collection.features) {
    const props = feature.properties;
    if (feature.geometry.type === 'LineString') {
      const mode = String(props.mode ?? '');
      out.push({
        kind: 'line',
        points: feature.geometry.coordinates.map((p) => [proj.x(p[0]), proj.y(p[1])]),
        className: MODE_CLASSES[mode] ?? 'leg-unknown',
        label: `${mode} edge ${props.edge_id}`,
      });
    } else if (props.role === 'origin' || props.role === 'destination') {
      const [lon, lat] = feature.geometry.coordinates;
      out.push({
        kind: 'marker',
        x: proj.x(lon),
        y: proj.y(lat),
        className: `marker-${props.role}`,
        label: String(props.role),
      });
    } else {
      const [lon, lat] = feature.geometry.coordinates;
      out.push({
        kind: 'marker',
        x: proj.x(lon),
        y: proj.y(lat),
        className: 'marker-transfer',
        label: `transfer ${props.from_mode} to ${props.to_mode}`,
      });
    }
  }
  return out;
}

export function toSvg(primitives: MapPrimitive[], width = 720, height = 420): string {
  const parts: string[] = [];
  for (const prim of primitives) {
    if (prim.kind === 'line') {
      const points = prim.points.map(([x, y]) => `${x.toFixed(1)},${y.toFixed(1)}`).join(' ');
      parts.push(`<polyline class="${prim.className}" points="${points}" fill="none"><title>${prim.label}</title></polyline>`);
    } else {
      parts.push(
        `<circle class="${prim.className}" cx="${prim.x.toFixed(1)}" cy="${prim.y.toFixed(1)}" r="5"><title>${prim.label}</title></circle>`,
      );
    }
  }
  return `<svg viewBox="0 0 ${width} ${height}" xmlns="http://www.w3.org/2000/svg">${parts.join('')}</svg>`;
}
